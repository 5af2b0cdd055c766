use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// SVM kernel. The polynomial kernel has no offset: `K(u, v) = (u·v)^degree`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Kernel {
    #[serde(rename = "poly")]
    Polynomial {
        degree: u32,
    },
    Rbf {
        gamma: f64,
    },
}

impl Default for Kernel {
    fn default() -> Self {
        Kernel::Polynomial { degree: 1 }
    }
}

impl Kernel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Kernel::Polynomial { degree } if degree < 1 => Err(Error::InvalidArgument(
                "polynomial degree must be at least 1".into(),
            )),
            Kernel::Rbf { gamma } if !(gamma > 0.0 && gamma.is_finite()) => Err(
                Error::InvalidArgument(format!("rbf gamma must be positive, got {gamma}")),
            ),
            _ => Ok(()),
        }
    }

    pub fn eval(&self, u: &[f64], v: &[f64]) -> f64 {
        debug_assert_eq!(u.len(), v.len());
        match *self {
            Kernel::Polynomial { degree } => {
                let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
                dot.powi(degree as i32)
            }
            Kernel::Rbf { gamma } => {
                let d2: f64 = u.iter().zip(v).map(|(a, b)| (a - b) * (a - b)).sum();
                (-gamma * d2).exp()
            }
        }
    }
}
