use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::YoungDiagram;
use crate::error::{Error, Result};
use crate::numeric::{big_ln, ln_factorial, ln_round_trip, to_big_int};

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn hook_product(diagram: &YoungDiagram) -> BigUint {
    // Row-wise accumulation in u64 keeps the bignum multiplications few.
    let mut acc = BigUint::one();
    let mut chunk: u64 = 1;
    for h in diagram.hook_lengths() {
        match chunk.checked_mul(h as u64) {
            Some(c) => chunk = c,
            None => {
                acc *= chunk;
                chunk = h as u64;
            }
        }
    }
    acc * chunk
}

/// `∏ (d + content)` over all cells; zero when the diagram has more than `d` rows.
fn content_product(diagram: &YoungDiagram, colors: u32) -> BigUint {
    if diagram.first_column_len() > colors {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    let mut chunk: u64 = 1;
    for c in diagram.contents() {
        let f = (colors as i64 + c) as u64;
        match chunk.checked_mul(f) {
            Some(v) => chunk = v,
            None => {
                acc *= chunk;
                chunk = f;
            }
        }
    }
    acc * chunk
}

fn exact_div(num: BigUint, den: &BigUint, what: &str, diagram: &YoungDiagram) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(
        r.is_zero(),
        "internal invariant violated: hook product does not divide {what} for {diagram}"
    );
    q
}

/// Dimension `D` of the symmetric-group irrep labelled by `diagram`, by the
/// hook-length formula.
pub fn dim_irrep(diagram: &YoungDiagram) -> BigUint {
    dim_irrep_with(diagram, &factorial(diagram.n()))
}

/// As [`dim_irrep`], reusing a precomputed `n!`.
pub fn dim_irrep_with(diagram: &YoungDiagram, n_factorial: &BigUint) -> BigUint {
    exact_div(n_factorial.clone(), &hook_product(diagram), "n!", diagram)
}

/// Multiplicity `m` of the irrep in `(C^colors)^{⊗n}`: the number of
/// semistandard tableaux of this shape with entries at most `colors`.
pub fn multiplicity(diagram: &YoungDiagram, colors: u32) -> BigUint {
    let contents = content_product(diagram, colors);
    if contents.is_zero() {
        return contents;
    }
    exact_div(contents, &hook_product(diagram), "the content product", diagram)
}

/// `D / m = n! / ∏(d + content)`, defined when the diagram has at most `colors` rows.
pub fn dim_mult_ratio(diagram: &YoungDiagram, colors: u32) -> Result<BigRational> {
    let den = content_product(diagram, colors);
    if den.is_zero() {
        return Err(Error::domain(format!(
            "multiplicity of {diagram} in d={colors} is zero; ratio undefined"
        )));
    }
    Ok(BigRational::new(
        to_big_int(factorial(diagram.n())),
        to_big_int(den),
    ))
}

/// `ln D` from hook lengths, usable far beyond exact range.
pub fn log_dim(diagram: &YoungDiagram) -> f64 {
    ln_factorial(diagram.n()) - diagram.hook_lengths().iter().map(|&h| (h as f64).ln()).sum::<f64>()
}

/// `ln m`, or `-inf` when the multiplicity vanishes.
pub fn log_mult(diagram: &YoungDiagram, colors: u32) -> f64 {
    match log_content_sum(diagram, colors) {
        Some(lc) => lc - diagram.hook_lengths().iter().map(|&h| (h as f64).ln()).sum::<f64>(),
        None => f64::NEG_INFINITY,
    }
}

/// `ln(m / D) = Σ ln(d + content) - ln n!`; the hook terms cancel.
/// `-inf` when the multiplicity vanishes.
pub fn log_mult_over_dim(diagram: &YoungDiagram, colors: u32, ln_n_factorial: f64) -> f64 {
    match log_content_sum(diagram, colors) {
        Some(lc) => lc - ln_n_factorial,
        None => f64::NEG_INFINITY,
    }
}

fn log_content_sum(diagram: &YoungDiagram, colors: u32) -> Option<f64> {
    if diagram.first_column_len() > colors {
        return None;
    }
    Some(
        diagram
            .contents()
            .map(|c| ((colors as i64 + c) as f64).ln())
            .sum(),
    )
}

/// How `min(m, D)` resolved for one diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinSide {
    /// `D < m`: every copy of the irrep fits, contributes `D²`.
    Dimension,
    /// `m < D`: contributes `m·D`.
    Multiplicity,
    /// `m = D`.
    Tie,
}

/// Exact and log-domain data for one diagram at a fixed number of colors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IrrepStats {
    pub diagram: YoungDiagram,
    pub colors: u32,
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub dim_irrep: BigUint,
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub multiplicity: BigUint,
    pub log_dim: f64,
    pub log_mult: f64,
    /// `D² / n!`
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub plancherel: BigRational,
    /// `m·D / d^n`
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub schur_weyl: BigRational,
}

impl IrrepStats {
    pub fn new(diagram: YoungDiagram, colors: u32) -> Self {
        let n = diagram.n();
        Self::with_constants(diagram, colors, &factorial(n), &BigUint::from(colors).pow(n))
    }

    /// Reuses `n!` and `d^n`, which dominate cost when scanning all partitions.
    pub fn with_constants(
        diagram: YoungDiagram,
        colors: u32,
        n_factorial: &BigUint,
        colors_pow_n: &BigUint,
    ) -> Self {
        let dim = dim_irrep_with(&diagram, n_factorial);
        let mult = multiplicity(&diagram, colors);
        let plancherel = BigRational::new(to_big_int(&dim * &dim), to_big_int(n_factorial.clone()));
        let schur_weyl = BigRational::new(to_big_int(&mult * &dim), to_big_int(colors_pow_n.clone()));
        IrrepStats {
            log_dim: exact_or_log(&dim, || log_dim(&diagram)),
            log_mult: if mult.is_zero() {
                f64::NEG_INFINITY
            } else {
                exact_or_log(&mult, || log_mult(&diagram, colors))
            },
            diagram,
            colors,
            dim_irrep: dim,
            multiplicity: mult,
            plancherel,
            schur_weyl,
        }
    }

    pub fn min_side(&self) -> MinSide {
        match self.dim_irrep.cmp(&self.multiplicity) {
            std::cmp::Ordering::Less => MinSide::Dimension,
            std::cmp::Ordering::Greater => MinSide::Multiplicity,
            std::cmp::Ordering::Equal => MinSide::Tie,
        }
    }

    /// `min(m, D)·D`, this diagram's contribution to `dim W`.
    pub fn dim_w_contribution(&self) -> BigUint {
        self.dim_irrep.clone().min(self.multiplicity.clone()) * &self.dim_irrep
    }
}

/// `ln x` from the exact value when it is representable, else the fallback.
fn exact_or_log(x: &BigUint, fallback: impl FnOnce() -> f64) -> f64 {
    match x.to_f64() {
        Some(v) if v.is_finite() => ln_round_trip(v),
        _ => big_ln(x).unwrap_or_else(fallback),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::enumerate_partitions;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Counts standard Young tableaux by removing corner cells recursively.
    fn syt_count(rows: &mut Vec<u32>) -> u64 {
        if rows.iter().all(|&r| r == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..rows.len() {
            let is_corner = rows[i] > 0 && (i + 1 == rows.len() || rows[i + 1] < rows[i]);
            if is_corner {
                rows[i] -= 1;
                total += syt_count(rows);
                rows[i] += 1;
            }
        }
        total
    }

    /// Counts semistandard tableaux with entries in 1..=d by filling cells
    /// in row-major order.
    fn ssyt_count(shape: &[u32], d: u32) -> u64 {
        fn fill(d: u32, cells: &[(usize, usize)], k: usize, t: &mut Vec<Vec<u32>>) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let lo_row = if j > 0 { t[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { t[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=d {
                t[i][j] = v;
                total += fill(d, cells, k + 1, t);
            }
            t[i][j] = 0;
            total
        }
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j)))
            .collect();
        let mut t: Vec<Vec<u32>> = shape.iter().map(|&r| vec![0; r as usize]).collect();
        fill(d, &cells, 0, &mut t)
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_irrep(&yd(&[5])), big(1));
        assert_eq!(dim_irrep(&yd(&[2, 1])), big(2));
        assert_eq!(syt_count(&mut vec![3, 1]), 3);
        assert_eq!(dim_irrep(&yd(&[3, 1])), big(3));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&yd(&[3]), 2), big(4));
        assert_eq!(multiplicity(&yd(&[1, 1, 1]), 2), big(0));
        assert_eq!(multiplicity(&yd(&[2, 1]), 2), big(2));
        assert_eq!(multiplicity(&yd(&[2, 2]), 2), big(1));
        assert_eq!(multiplicity(&yd(&[3, 1]), 2), big(3));
    }

    #[test]
    fn hook_formulas_match_tableau_counts() {
        for n in 1..=7 {
            for d in enumerate_partitions(n).unwrap() {
                assert_eq!(dim_irrep(&d), big(syt_count(&mut d.rows().to_vec())), "{d}");
                for colors in 1..=4 {
                    assert_eq!(multiplicity(&d, colors), big(ssyt_count(d.rows(), colors)), "{d} d={colors}");
                }
            }
        }
    }

    #[test]
    fn ratio_examples() {
        let r = |rows: &[u32], d| dim_mult_ratio(&yd(rows), d).unwrap();
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(r(&[3], 2), q(1, 4));
        assert_eq!(r(&[2, 1], 2), q(1, 1));
        assert_eq!(r(&[1], 5), q(1, 5));
        assert!(matches!(dim_mult_ratio(&yd(&[1, 1, 1]), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn stats_for_three() {
        let ws: Vec<_> = enumerate_partitions(3)
            .unwrap()
            .map(|d| IrrepStats::new(d, 2))
            .collect();
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(ws.iter().map(|s| s.plancherel.clone()).collect::<Vec<_>>(), vec![q(1, 6), q(4, 6), q(1, 6)]);
        assert_eq!(ws.iter().map(|s| s.schur_weyl.clone()).collect::<Vec<_>>(), vec![q(1, 2), q(1, 2), q(0, 1)]);
        assert_eq!(ws[2].log_mult, f64::NEG_INFINITY);
        assert_eq!(ws[1].min_side(), MinSide::Tie);
        assert_eq!(ws[0].min_side(), MinSide::Dimension);
    }

    #[test]
    fn log_forms_agree_with_exact() {
        for d in enumerate_partitions(20).unwrap() {
            let dim = dim_irrep(&d).to_f64().unwrap();
            assert!((log_dim(&d) - dim.ln()).abs() < 1e-12 * dim.ln().max(1.0), "{d}");
            let m = multiplicity(&d, 7);
            if !m.is_zero() {
                let mf = m.to_f64().unwrap();
                assert!((log_mult(&d, 7) - mf.ln()).abs() < 1e-12 * mf.ln().max(1.0), "{d}");
            }
        }
    }

    /// 10 ulps of `D`, widened by the gap between adjacent doubles near
    /// `ln D` once that gap is itself coarser than 10 ulps after `exp`.
    #[test]
    fn exp_log_dim_round_trips() {
        for n in 1..=22 {
            for d in enumerate_partitions(n).unwrap() {
                let s = IrrepStats::new(d, 3);
                let exact = s.dim_irrep.to_f64().unwrap();
                let back = s.log_dim.exp();
                let ulp = exact.next_up() - exact;
                let grid = exact * (s.log_dim.next_up() - s.log_dim);
                let err = (back - exact).abs();
                assert!(err <= 10.0 * ulp + 0.5 * grid, "{} D={exact} err/ulp={}", s.diagram, err / ulp);
                if exact < 1e6 {
                    assert!(err <= 10.0 * ulp, "{} D={exact}", s.diagram);
                }
            }
        }
    }
}
