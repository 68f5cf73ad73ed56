//! The domains in the root plane `(alpha, beta)` and their images in the
//! coefficient plane `(a, b)`, with exact rasterization.

use std::cmp::Ordering;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::{significant, CSV_DIGITS};
use crate::qfield::Quad;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RegionId {
    D1,
    D2,
    D3,
    D,
    D1P,
    D2P,
    D3P,
    DP,
    #[serde(rename = "DP_BOUNDARY")]
    DpBoundary,
}

impl RegionId {
    pub const ALL: [RegionId; 9] = [
        RegionId::D1,
        RegionId::D2,
        RegionId::D3,
        RegionId::D,
        RegionId::D1P,
        RegionId::D2P,
        RegionId::D3P,
        RegionId::DP,
        RegionId::DpBoundary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RegionId::D1 => "D1",
            RegionId::D2 => "D2",
            RegionId::D3 => "D3",
            RegionId::D => "D",
            RegionId::D1P => "D1P",
            RegionId::D2P => "D2P",
            RegionId::D3P => "D3P",
            RegionId::DP => "DP",
            RegionId::DpBoundary => "DP_BOUNDARY",
        }
    }

    pub fn is_root_plane(self) -> bool {
        matches!(self, RegionId::D1 | RegionId::D2 | RegionId::D3 | RegionId::D)
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RegionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RegionId::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown region {s:?}")))
    }
}

fn ge<T: Scalar>(x: &T, y: &T) -> bool {
    x >= y
}

fn abs_le<T: Scalar>(x: &T, y: &T) -> bool {
    x.abs() <= y.abs()
}

/// Membership of `(alpha, beta)` in a root-plane domain.
pub fn contains_root_plane<T: Scalar>(region: RegionId, alpha: &T, beta: &T) -> Result<bool> {
    let one = T::one();
    let sum = alpha.clone() + beta.clone();
    let ordered = abs_le(beta, alpha);
    Ok(match region {
        RegionId::D1 => ge(&sum, &one) && ge(alpha, &one) && ordered,
        RegionId::D2 => abs_le(beta, &sum) && ordered,
        RegionId::D3 => abs_le(beta, &one) && ordered,
        RegionId::D => ge(&sum, &one) && ge(alpha, &one) && abs_le(beta, &one),
        other => return Err(Error::WrongPlane(other, "root")),
    })
}

/// Real roots of `x^2 - a x + b` as `(alpha, beta)` with `|alpha| >= |beta|`,
/// taking `alpha = alpha_+` on ties. Defined for `b = 0` as well.
fn ordered_real_roots<T: Scalar>(a: &T, b: &T) -> Option<(Quad<T>, Quad<T>)> {
    let disc = a.clone() * a.clone() - T::from_int(4) * b.clone();
    if disc.is_negative() {
        return None;
    }
    let half = T::half();
    let s = Quad::sqrt_of(disc).ok()?.scale(&half);
    let mid = a.clone() * half;
    let plus = s.add_scalar(&mid);
    let minus = (-s).add_scalar(&mid);
    if plus.cmp_abs(&minus).ok()? == Ordering::Less {
        Some((minus, plus))
    } else {
        Some((plus, minus))
    }
}

/// Membership of `(a, b)` in a coefficient-plane domain.
///
/// The primed domains are evaluated from their root-plane definitions. For
/// complex roots `|alpha| = |beta| = sqrt(b)`, so D2P reduces to `a^2 >= b`,
/// D3P to `b <= 1`, and D1P is empty because `alpha >= 1` needs a real root.
pub fn contains_coeff_plane<T: Scalar>(region: RegionId, a: &T, b: &T) -> Result<bool> {
    let one = T::one();
    let roots = ordered_real_roots(a, b);
    let one_q = Quad::rational(one.clone());
    Ok(match region {
        RegionId::D1P => match &roots {
            Some((alpha, _)) => ge(a, &one) && alpha >= &one_q,
            None => false,
        },
        RegionId::D2P => match &roots {
            Some((_, beta)) => beta.cmp_abs(&Quad::rational(a.clone()))? != Ordering::Greater,
            None => a.clone() * a.clone() >= *b,
        },
        RegionId::D3P => match &roots {
            Some((_, beta)) => beta.cmp_abs(&one_q)? != Ordering::Greater,
            None => *b <= one,
        },
        RegionId::DP => in_dp(a, b),
        RegionId::DpBoundary => {
            let upper = a.clone() - one.clone();
            let lower = -a.clone() - one.clone();
            (*a == one && in_dp(a, b)) || (ge(a, &one) && (*b == upper || *b == lower))
        }
        other => return Err(Error::WrongPlane(other, "coefficient")),
    })
}

fn in_dp<T: Scalar>(a: &T, b: &T) -> bool {
    let one = T::one();
    ge(a, &one) && *b <= a.clone() - one.clone() && *b >= -a.clone() - one
}

/// Membership in whichever plane `region` lives in.
pub fn contains<T: Scalar>(region: RegionId, x: &T, y: &T) -> bool {
    if region.is_root_plane() { contains_root_plane(region, x, y) } else { contains_coeff_plane(region, x, y) }
        .expect("plane chosen from the tag")
}

/// Cell-center membership bitmap over `[x_min, x_max] x [y_min, y_max]`.
///
/// Row 0 is the top of the box (largest `y`), column 0 the left edge.
#[derive(Clone, Debug, PartialEq)]
pub struct Raster<T> {
    pub region: RegionId,
    pub bbox: (T, T, T, T),
    pub resolution: usize,
    cells: Vec<bool>,
}

impl<T: Scalar> Raster<T> {
    pub fn cell(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.resolution + col]
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn member_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Exact center of cell `(row, col)`.
    pub fn center(&self, row: usize, col: usize) -> (T, T) {
        cell_center(&self.bbox, self.resolution, row, col)
    }

    /// Binary PGM, 255 for members and 0 otherwise.
    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.resolution, self.resolution).into_bytes();
        out.extend(self.cells.iter().map(|&c| if c { 255u8 } else { 0 }));
        out
    }

    /// `x,y` per member center, row-major.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for row in 0..self.resolution {
            for col in 0..self.resolution {
                if self.cell(row, col) {
                    let (x, y) = self.center(row, col);
                    out.push_str(&significant(x.to_f64_lossy(), CSV_DIGITS));
                    out.push(',');
                    out.push_str(&significant(y.to_f64_lossy(), CSV_DIGITS));
                    out.push('\n');
                }
            }
        }
        out
    }

    /// Writes CSV for a `.csv` extension and PGM otherwise.
    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
            std::fs::write(path, self.to_csv())
        } else {
            std::fs::write(path, self.to_pgm())
        }
    }
}

fn cell_center<T: Scalar>(bbox: &(T, T, T, T), res: usize, row: usize, col: usize) -> (T, T) {
    let (x0, x1, y0, y1) = bbox;
    let n = T::from_usize(2 * res).expect("resolution fits the scalar");
    let x = x0.clone() + (x1.clone() - x0.clone()) * T::from_usize(2 * col + 1).unwrap() / n.clone();
    let y = y1.clone() - (y1.clone() - y0.clone()) * T::from_usize(2 * row + 1).unwrap() / n;
    (x, y)
}

/// Evaluates `region` at every cell center of a `resolution`-square grid.
/// Rows are computed in parallel and assembled in order.
pub fn rasterize<T: Scalar>(region: RegionId, bbox: (T, T, T, T), resolution: usize) -> Result<Raster<T>> {
    if resolution < 2 {
        return Err(Error::Resolution);
    }
    if bbox.0 >= bbox.1 || bbox.2 >= bbox.3 {
        return Err(Error::DegenerateBox);
    }
    let cells = (0..resolution)
        .into_par_iter()
        .flat_map_iter(|row| {
            let bbox = &bbox;
            (0..resolution).map(move |col| {
                let (x, y) = cell_center(bbox, resolution, row, col);
                contains(region, &x, &y)
            })
        })
        .collect();
    Ok(Raster { region, bbox, resolution, cells })
}
