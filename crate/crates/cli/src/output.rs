//! Serializable report shapes. Field order is fixed by the struct
//! definitions, so identical inputs serialize to identical bytes.

use serde::Serialize;

use latcoh_core::{Degree0Tower, GradedModuleSummary, MinEuResult, SpectrumSlice};

/// One materialized level of a graded module summary. Torsion orders are
/// decimal strings (they are exact big integers).
#[derive(Serialize)]
pub struct LevelOut {
    pub n: i64,
    pub degree: i64,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<String>>,
    pub components: usize,
}

/// Rank of the restriction `H^q(S_upper) -> H^q(S_lower)` per degree.
#[derive(Serialize)]
pub struct URankOut {
    pub lower: i64,
    pub upper: i64,
    pub ranks: Vec<usize>,
}

#[derive(Serialize)]
pub struct CohomologyOut {
    pub kind: &'static str,
    pub min_level: i64,
    pub stable_from: i64,
    pub levels: Vec<LevelOut>,
    pub u_ranks: Vec<URankOut>,
    pub eu: i64,
}

pub fn cohomology_out(
    summary: &GradedModuleSummary,
    eu: i64,
    max_level: Option<i64>,
) -> CohomologyOut {
    let cap = max_level.unwrap_or(i64::MAX);
    let levels = summary
        .levels
        .iter()
        .filter(|l| l.level <= cap)
        .map(|l| LevelOut {
            n: l.level,
            degree: l.degree(),
            betti: l.betti.clone(),
            torsion: l
                .torsion
                .iter()
                .map(|t| t.iter().map(|d| d.to_string()).collect())
                .collect(),
            components: l.components,
        })
        .collect();
    let u_ranks = summary
        .u_ranks
        .iter()
        .enumerate()
        .filter(|(k, _)| summary.min_level + (*k as i64) < cap)
        .map(|(k, ranks)| URankOut {
            lower: summary.min_level + k as i64,
            upper: summary.min_level + k as i64 + 1,
            ranks: ranks.clone(),
        })
        .collect();
    CohomologyOut {
        kind: "cohomology",
        min_level: summary.min_level,
        stable_from: summary.stable_from,
        levels,
        u_ranks,
        eu,
    }
}

#[derive(Serialize)]
pub struct TowerOut {
    /// Homogeneous degree of the `T^+` summand.
    pub tplus_degree: i64,
    pub min_level: i64,
    pub stable_from: i64,
    pub ranks: Vec<usize>,
    pub reduced_ranks: Vec<usize>,
    pub u_ranks: Vec<usize>,
}

pub fn tower_out(tower: &Degree0Tower) -> TowerOut {
    TowerOut {
        tplus_degree: tower.tplus_degree(),
        min_level: tower.min_level,
        stable_from: tower.stable_from,
        ranks: tower.ranks.clone(),
        reduced_ranks: tower.reduced_ranks(),
        u_ranks: tower.u_ranks.clone(),
    }
}

#[derive(Serialize)]
pub struct PathOut {
    pub kind: &'static str,
    pub points: Vec<Vec<i64>>,
    pub module: TowerOut,
    /// `-m_gamma + rank H^0_red`, from the computed module.
    pub eu_module: i64,
    /// `-w0(0) + sum max(0, w0(x_i) - w0(x_{i+1}))`, the closed form.
    pub eu_weights: i64,
}

#[derive(Serialize)]
pub struct MinPathOut {
    pub kind: &'static str,
    pub eu: i64,
    pub witness: Vec<Vec<i64>>,
    pub method: &'static str,
}

pub fn min_path_out(result: &MinEuResult) -> MinPathOut {
    MinPathOut {
        kind: "min_increasing_path",
        eu: result.eu,
        witness: result
            .witness
            .points()
            .iter()
            .map(|p| p.coords().to_vec())
            .collect(),
        method: match result.method {
            latcoh_core::MinEuMethod::Exhaustive => "exhaustive",
            latcoh_core::MinEuMethod::DynamicProgramming => "dp",
        },
    }
}

/// Exactly the documented spectrum shape: fractions then the genus.
#[derive(Serialize)]
pub struct SpectrumOut {
    pub spectrum: Vec<String>,
    pub p_g: usize,
}

pub fn spectrum_out(slice: &SpectrumSlice) -> SpectrumOut {
    SpectrumOut {
        spectrum: slice.fraction_strings(),
        p_g: slice.p_g(),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}
