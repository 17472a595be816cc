//! Weighted homogeneous hypersurface germs `(weights, degree)`: exact
//! enumeration of the Hodge-spectrum slice in `(0,1)`, the geometric genus,
//! the reduced rank-one weight function, and the resulting graded root and
//! lattice cohomology. A product-formula oracle covers the Brieskorn case.

use num_integer::Integer;
use num_rational::Ratio;

use crate::cohomology::{
    compute_summary, euler_characteristic, GradedModuleSummary, Region,
};
use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, WeightModel};
use crate::root::{build_root, GradedRoot};

/// Weights `w_0..w_n` (positive, gcd one, each at most `d`) and degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedHomogeneousGerm {
    weights: Vec<i64>,
    degree: i64,
}

impl WeightedHomogeneousGerm {
    pub fn new(weights: Vec<i64>, degree: i64) -> Result<WeightedHomogeneousGerm> {
        if weights.is_empty() {
            return Err(Error::GermInvalid {
                reason: "at least one weight required".to_string(),
            });
        }
        if degree <= 0 {
            return Err(Error::GermInvalid {
                reason: format!("degree must be positive, got {degree}"),
            });
        }
        if let Some(&w) = weights.iter().find(|&&w| w <= 0) {
            return Err(Error::GermInvalid {
                reason: format!("weights must be positive, got {w}"),
            });
        }
        if let Some(&w) = weights.iter().find(|&&w| w > degree) {
            return Err(Error::GermInvalid {
                reason: format!("weight {w} exceeds the degree {degree}"),
            });
        }
        let gcd = weights.iter().fold(0i64, |g, &w| g.gcd(&w));
        if gcd != 1 {
            return Err(Error::GermInvalid {
                reason: format!("weights have gcd {gcd}, expected 1"),
            });
        }
        Ok(WeightedHomogeneousGerm { weights, degree })
    }

    /// Brieskorn data `x_1^{a_1} + .. + x_k^{a_k}`: degree `lcm(a_i)`,
    /// weights `d / a_i`.
    pub fn from_brieskorn(exponents: &[i64]) -> Result<WeightedHomogeneousGerm> {
        if exponents.is_empty() {
            return Err(Error::GermInvalid {
                reason: "at least one exponent required".to_string(),
            });
        }
        if let Some(&a) = exponents.iter().find(|&&a| a < 2) {
            return Err(Error::GermInvalid {
                reason: format!("Brieskorn exponents must be at least 2, got {a}"),
            });
        }
        let d = exponents.iter().fold(1i64, |l, &a| l.lcm(&a));
        let weights = exponents.iter().map(|&a| d / a).collect();
        WeightedHomogeneousGerm::new(weights, d)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn weight_sum(&self) -> i64 {
        self.weights.iter().sum()
    }

    /// `d + 1 - sum(w)`, the length of the reduced rank-one rectangle
    /// (negative for degenerate data).
    pub fn reduced_length(&self) -> i64 {
        self.degree + 1 - self.weight_sum()
    }

    /// `prod (d - w_i) / w_i`, when integral; an advisory sanity value for
    /// the input data only.
    pub fn milnor_number(&self) -> Option<i64> {
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for &w in &self.weights {
            num = num.checked_mul((self.degree - w) as i128)?;
            den = den.checked_mul(w as i128)?;
        }
        (den != 0 && num % den == 0)
            .then(|| i64::try_from(num / den).ok())
            .flatten()
    }
}

/// Sorted multiset of spectral numbers in `(0,1)`, as reduced fractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumSlice {
    values: Vec<Ratio<i64>>,
}

impl SpectrumSlice {
    fn from_unsorted(mut values: Vec<Ratio<i64>>) -> SpectrumSlice {
        values.sort();
        SpectrumSlice { values }
    }

    pub fn values(&self) -> &[Ratio<i64>] {
        &self.values
    }

    /// The geometric genus: the number of spectral numbers in `(0,1)`.
    pub fn p_g(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Exact `"p/q"` strings.
    pub fn fraction_strings(&self) -> Vec<String> {
        self.values
            .iter()
            .map(|r| format!("{}/{}", r.numer(), r.denom()))
            .collect()
    }
}

/// All `k >= 0` with `sum (k_i + 1) w_i <= d`, classified: sums strictly
/// below `d` contribute spectral numbers, a sum equal to `d` is a lattice
/// point on the weight hyperplane and makes the germ unsupported.
fn enumerate_under_hyperplane(germ: &WeightedHomogeneousGerm) -> Result<Vec<i64>> {
    let weights = &germ.weights;
    let d = germ.degree;
    let tail_min: Vec<i64> = {
        let mut suffix = vec![0i64; weights.len() + 1];
        for i in (0..weights.len()).rev() {
            suffix[i] = suffix[i + 1] + weights[i];
        }
        suffix
    };
    let mut sums = Vec::new();
    let mut k = vec![0i64; weights.len()];
    fn rec(
        weights: &[i64],
        tail_min: &[i64],
        d: i64,
        i: usize,
        partial: i64,
        k: &mut Vec<i64>,
        sums: &mut Vec<i64>,
    ) -> Result<()> {
        if i == weights.len() {
            if partial == d {
                return Err(Error::SpectralNumberOne {
                    point: LatticePoint::new(k.clone()).to_string(),
                });
            }
            sums.push(partial);
            return Ok(());
        }
        let mut ki = 0i64;
        loop {
            let used = partial + (ki + 1) * weights[i];
            if used + tail_min[i + 1] > d {
                break;
            }
            k[i] = ki;
            rec(weights, tail_min, d, i + 1, used, k, sums)?;
            ki += 1;
        }
        Ok(())
    }
    rec(weights, &tail_min, d, 0, 0, &mut k, &mut sums)?;
    Ok(sums)
}

/// The Hodge-spectrum slice `Spec_{(0,1)}`: one value
/// `sum (k_i + 1) w_i / d` per lattice point strictly under the weight
/// hyperplane. Fails if a lattice point lies on the hyperplane (a spectral
/// number equal to one).
pub fn spectrum_unit_interval(germ: &WeightedHomogeneousGerm) -> Result<SpectrumSlice> {
    let sums = enumerate_under_hyperplane(germ)?;
    Ok(SpectrumSlice::from_unsorted(
        sums.into_iter()
            .map(|s| Ratio::new(s, germ.degree))
            .collect(),
    ))
}

/// The reduced Hilbert function on `[0, d+1-sum(w)]`:
/// `h(l) = #{ spectral numbers < (l + sum(w)) / d }`.
pub fn reduced_hilbert(germ: &WeightedHomogeneousGerm) -> Result<Vec<i64>> {
    let slice = spectrum_unit_interval(germ)?;
    let zbar = germ.reduced_length();
    if zbar < 0 {
        return Err(Error::NegativeReducedLength { zbar });
    }
    let wsum = germ.weight_sum();
    Ok((0..=zbar)
        .map(|l| {
            let threshold = Ratio::new(l + wsum, germ.degree);
            slice.values().iter().filter(|&&a| a < threshold).count() as i64
        })
        .collect())
}

/// The reduced rank-one weight table
/// `w(l) = h(l) + h(zbar - l) - p_g`; symmetric, zero at both ends.
pub fn reduced_weight(germ: &WeightedHomogeneousGerm) -> Result<WeightModel> {
    let h = reduced_hilbert(germ)?;
    let zbar = germ.reduced_length() as usize;
    let p_g = h[zbar];
    let values: Vec<i64> = (0..=zbar).map(|l| h[l] + h[zbar - l] - p_g).collect();
    WeightModel::rank_one(values)
}

/// Everything the reduced pipeline produces for one germ.
#[derive(Clone, Debug)]
pub struct AnalyticInvariants {
    pub spectrum: SpectrumSlice,
    pub p_g: usize,
    pub model: WeightModel,
    pub root: GradedRoot,
    pub summary: GradedModuleSummary,
    pub eu: i64,
}

/// Runs the reduced rank-one model through the graded root and lattice
/// cohomology pipelines; checks that higher cohomology vanishes and that
/// the Euler characteristic equals the geometric genus.
pub fn analytic_invariants(germ: &WeightedHomogeneousGerm) -> Result<AnalyticInvariants> {
    let spectrum = spectrum_unit_interval(germ)?;
    let model = reduced_weight(germ)?;
    let summary = compute_summary(&model, &Region::Full)?;
    let root = build_root(&model, &Region::Full)?;
    let eu = euler_characteristic(&summary);
    for level in &summary.levels {
        if level.betti.iter().skip(1).any(|&b| b != 0) {
            return Err(Error::Internal(format!(
                "rank-one model has higher cohomology at level {}",
                level.level
            )));
        }
    }
    if eu != spectrum.p_g() as i64 {
        return Err(Error::Internal(format!(
            "eu = {eu} differs from p_g = {}",
            spectrum.p_g()
        )));
    }
    Ok(AnalyticInvariants {
        p_g: spectrum.p_g(),
        spectrum,
        model,
        root,
        summary,
        eu,
    })
}

/// Brieskorn spectrum by the product formula: the factor for exponent `a`
/// expands to `t^{1/a} + .. + t^{(a-1)/a}`, so the spectrum is the multiset
/// `{ sum_i j_i / a_i : 1 <= j_i <= a_i - 1 }`; this returns its `(0,1)`
/// slice, independently of the lattice enumeration.
pub fn brieskorn_spectrum_oracle(exponents: &[i64]) -> Result<SpectrumSlice> {
    if exponents.is_empty() {
        return Err(Error::GermInvalid {
            reason: "at least one exponent required".to_string(),
        });
    }
    if let Some(&a) = exponents.iter().find(|&&a| a < 2) {
        return Err(Error::GermInvalid {
            reason: format!("Brieskorn exponents must be at least 2, got {a}"),
        });
    }
    let one = Ratio::new(1i64, 1);
    let tail_min: Vec<Ratio<i64>> = {
        let mut suffix = vec![Ratio::new(0, 1); exponents.len() + 1];
        for i in (0..exponents.len()).rev() {
            suffix[i] = suffix[i + 1] + Ratio::new(1, exponents[i]);
        }
        suffix
    };
    fn rec(
        exponents: &[i64],
        tail_min: &[Ratio<i64>],
        one: Ratio<i64>,
        i: usize,
        partial: Ratio<i64>,
        out: &mut Vec<Ratio<i64>>,
    ) {
        if i == exponents.len() {
            if partial < one && partial > Ratio::new(0, 1) {
                out.push(partial);
            }
            return;
        }
        for j in 1..exponents[i] {
            let next = partial + Ratio::new(j, exponents[i]);
            if next + tail_min[i + 1] >= one {
                break;
            }
            rec(exponents, tail_min, one, i + 1, next, out);
        }
    }
    let mut out = Vec::new();
    rec(
        exponents,
        &tail_min,
        one,
        0,
        Ratio::new(0, 1),
        &mut out,
    );
    Ok(SpectrumSlice::from_unsorted(out))
}

/// True when some `sum j_i / a_i` with `1 <= j_i <= a_i - 1` equals one:
/// the product-formula view of a spectral number equal to one.
pub fn brieskorn_has_boundary_point(exponents: &[i64]) -> bool {
    fn rec(exponents: &[i64], i: usize, partial: Ratio<i64>) -> bool {
        let one = Ratio::new(1i64, 1);
        if i == exponents.len() {
            return partial == one;
        }
        for j in 1..exponents[i] {
            let next = partial + Ratio::new(j, exponents[i]);
            if next > one {
                break;
            }
            if rec(exponents, i + 1, next) {
                return true;
            }
        }
        false
    }
    rec(exponents, 0, Ratio::new(0, 1))
}
