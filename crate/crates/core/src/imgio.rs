//! Grayscale image loading (PGM P2/P5, 8-bit PNG), quantization and ROI masks.
//!
//! Source bytes `v` are quantized to `levels` gray levels as
//! `floor(v * levels / 256)`. Masks use 0 for "outside ROI" and any nonzero
//! value for "inside".

use std::fs;
use std::io::Write;
use std::path::Path;

use image::{ColorType, ImageReader};

use crate::error::{Error, Result};

pub const DEFAULT_LEVELS: u16 = 256;

/// A quantized grayscale raster with an optional region-of-interest mask.
///
/// Pixels are stored row-major; `x` indexes columns and `y` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    levels: u16,
    pixels: Vec<u8>,
    mask: Option<Vec<bool>>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, levels: u16, pixels: Vec<u8>) -> Result<Self> {
        check_levels(levels)?;
        if width == 0 || height == 0 {
            return Err(Error::InvalidArgument(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if pixels.len() != width * height {
            return Err(Error::InvalidArgument(format!(
                "{} pixels given for a {width}x{height} image",
                pixels.len()
            )));
        }
        if let Some(&v) = pixels.iter().find(|&&v| u16::from(v) >= levels) {
            return Err(Error::InvalidArgument(format!(
                "pixel value {v} out of range for {levels} levels"
            )));
        }
        Ok(GrayImage {
            width,
            height,
            levels,
            pixels,
            mask: None,
        })
    }

    /// Quantizes raw 8-bit samples to `levels` gray levels.
    pub fn from_raw(width: usize, height: usize, levels: u16, raw: &[u8]) -> Result<Self> {
        check_levels(levels)?;
        let pixels = raw.iter().map(|&v| quantize(v, levels)).collect();
        GrayImage::new(width, height, levels, pixels)
    }

    /// Attaches a mask (true = inside ROI). Pixel values are untouched.
    pub fn with_mask(mut self, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != self.pixels.len() {
            return Err(Error::InvalidArgument(format!(
                "mask has {} entries, image has {}",
                mask.len(),
                self.pixels.len()
            )));
        }
        if !mask.iter().any(|&m| m) {
            return Err(Error::EmptyRoi);
        }
        self.mask = Some(mask);
        Ok(self)
    }

    pub fn without_mask(mut self) -> Self {
        self.mask = None;
        self
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn levels(&self) -> u16 {
        self.levels
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn mask(&self) -> Option<&[bool]> {
        self.mask.as_deref()
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    pub fn in_roi(&self, x: usize, y: usize) -> bool {
        self.mask.as_ref().is_none_or(|m| m[y * self.width + x])
    }

    /// Value at signed coordinates, or `None` when out of bounds or outside the ROI.
    pub fn roi_value(&self, x: i64, y: i64) -> Option<u8> {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            return None;
        }
        let (x, y) = (x as usize, y as usize);
        self.in_roi(x, y).then(|| self.get(x, y))
    }

    /// Number of in-ROI pixels (all pixels when unmasked).
    pub fn roi_pixel_count(&self) -> usize {
        match &self.mask {
            Some(m) => m.iter().filter(|&&b| b).count(),
            None => self.pixels.len(),
        }
    }
}

pub fn quantize(v: u8, levels: u16) -> u8 {
    ((u32::from(v) * u32::from(levels)) / 256) as u8
}

fn check_levels(levels: u16) -> Result<()> {
    if (2..=256).contains(&levels) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "levels must be in 2..=256, got {levels}"
        )))
    }
}

/// Raw 8-bit grayscale raster as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawGray {
    pub width: usize,
    pub height: usize,
    pub data: Vec<u8>,
}

/// Loads an image and quantizes it to `levels` gray levels. No mask is set.
pub fn load_image(path: impl AsRef<Path>, levels: u16) -> Result<GrayImage> {
    check_levels(levels)?;
    let path = path.as_ref();
    let raw = read_raw(path)?;
    GrayImage::from_raw(raw.width, raw.height, levels, &raw.data)
}

/// Loads a mask file and returns a copy of `image` with the mask attached.
pub fn load_mask(path: impl AsRef<Path>, image: &GrayImage) -> Result<GrayImage> {
    let raw = read_raw(path.as_ref())?;
    if raw.width != image.width || raw.height != image.height {
        return Err(Error::DimensionMismatch {
            image_width: image.width,
            image_height: image.height,
            mask_width: raw.width,
            mask_height: raw.height,
        });
    }
    let mask = raw.data.iter().map(|&v| v != 0).collect();
    image.clone().with_mask(mask)
}

/// Reads 8-bit samples from a PGM (P2/P5) or grayscale PNG file.
pub fn read_raw(path: &Path) -> Result<RawGray> {
    let bytes = fs::read(path).map_err(|source| Error::Input {
        path: path.to_owned(),
        source,
    })?;
    if bytes.starts_with(b"P2") || bytes.starts_with(b"P5") {
        parse_pgm(&bytes).map_err(|(field, message)| Error::Format {
            path: path.to_owned(),
            field,
            message,
        })
    } else if bytes.starts_with(b"\x89PNG") {
        decode_png(path)
    } else {
        Err(Error::Format {
            path: path.to_owned(),
            field: "magic",
            message: "not a P2/P5 PGM or PNG file".into(),
        })
    }
}

fn decode_png(path: &Path) -> Result<RawGray> {
    let format_err = |field, message: String| Error::Format {
        path: path.to_owned(),
        field,
        message,
    };
    let reader = ImageReader::open(path).map_err(|source| Error::Input {
        path: path.to_owned(),
        source,
    })?;
    let img = reader
        .with_guessed_format()
        .map_err(|source| Error::Input {
            path: path.to_owned(),
            source,
        })?
        .decode()
        .map_err(|e| format_err("data", e.to_string()))?;
    match img.color() {
        ColorType::L8 => {}
        ColorType::L16 => return Err(format_err("bit depth", "unsupported bit depth 16".into())),
        other => {
            return Err(format_err(
                "color type",
                format!("expected 8-bit grayscale, found {other:?}"),
            ))
        }
    }
    let (width, height) = (img.width() as usize, img.height() as usize);
    Ok(RawGray {
        width,
        height,
        data: img.into_luma8().into_raw(),
    })
}

type PgmError = (&'static str, String);

struct HeaderCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HeaderCursor<'a> {
    fn skip_ws_and_comments(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b if b.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn token(&mut self, field: &'static str) -> Result<&'a str, PgmError> {
        self.skip_ws_and_comments();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err((field, "unexpected end of file".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .map_err(|_| (field, "non-ASCII token".to_string()))
    }

    fn number(&mut self, field: &'static str) -> Result<usize, PgmError> {
        let tok = self.token(field)?;
        tok.parse()
            .map_err(|_| (field, format!("invalid value {tok:?}")))
    }
}

fn parse_pgm(bytes: &[u8]) -> Result<RawGray, PgmError> {
    let binary = &bytes[..2] == b"P5";
    let mut cur = HeaderCursor { bytes, pos: 2 };
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    let maxval = cur.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(("width", format!("empty image {width}x{height}")));
    }
    if maxval == 0 || maxval > 255 {
        return Err(("maxval", format!("unsupported bit depth (maxval {maxval})")));
    }
    let n = width * height;
    let data = if binary {
        // exactly one whitespace byte separates maxval from the raster
        let start = cur.pos + 1;
        let raster = bytes.get(start..start + n).ok_or_else(|| {
            (
                "raster",
                format!(
                    "expected {n} bytes, found {}",
                    bytes.len().saturating_sub(start)
                ),
            )
        })?;
        raster.to_vec()
    } else {
        let mut data = Vec::with_capacity(n);
        for _ in 0..n {
            let v = cur.number("raster")?;
            if v > maxval {
                return Err(("raster", format!("sample {v} exceeds maxval {maxval}")));
            }
            data.push(v as u8);
        }
        data
    };
    if binary {
        if let Some(&v) = data.iter().find(|&&v| usize::from(v) > maxval) {
            return Err(("raster", format!("sample {v} exceeds maxval {maxval}")));
        }
    }
    Ok(RawGray {
        width,
        height,
        data,
    })
}

/// Writes pixel values verbatim as a binary PGM with maxval 255.
pub fn write_pgm(image: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    write_raw_pgm(image.width, image.height, &image.pixels, path)
}

/// Writes raw 8-bit samples as a binary PGM with maxval 255.
pub fn write_raw_pgm(
    width: usize,
    height: usize,
    data: &[u8],
    path: impl AsRef<Path>,
) -> Result<()> {
    if data.len() != width * height {
        return Err(Error::InvalidArgument(format!(
            "{} samples given for a {width}x{height} image",
            data.len()
        )));
    }
    let mut out = Vec::with_capacity(data.len() + 32);
    write!(out, "P5\n{width} {height}\n255\n")?;
    out.extend_from_slice(data);
    fs::write(path, out)?;
    Ok(())
}
