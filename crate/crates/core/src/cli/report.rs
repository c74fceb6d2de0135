//! Serializable reports. Rationals are `"p/q"` strings, monomials are
//! exponent vectors, and point and functional indices are 1-based.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::groebner::{Dimension, GroebnerBasis};
use crate::idempotents::IdempotentFamily;
use crate::mzdecide::{Certificate, ConditionI, ConditionII, Prepared, Verdict};
use crate::oracle::OracleVerdict;
use crate::polycore::{Monomial, Polynomial};
use crate::spectrum::{apply_shift, PointSpectrum, ShiftDirection};
use crate::{Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermReport {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub text: String,
    pub terms: Vec<TermReport>,
}

impl PolyReport {
    pub fn new(p: &Poly, names: &[String]) -> Self {
        PolyReport {
            text: p.display_with(names).to_string(),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| TermReport { exponents: m.exponents().to_vec(), coeff: c.to_string() })
                .collect(),
        }
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn monomial_text(m: &Monomial, names: &[String]) -> String {
    Polynomial::term(m.clone(), Rational::from_integer(1.into())).display_with(names).to_string()
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub index: usize,
    /// Original coordinates.
    pub coords: Vec<String>,
    /// Coordinates after the shift.
    pub shifted: Vec<String>,
    pub multiplicity: Vec<u32>,
}

fn point_reports(spectrum: &PointSpectrum<Rational>) -> Vec<PointReport> {
    spectrum
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| PointReport {
            index: i + 1,
            coords: strings(&spectrum.original_coords(i)),
            shifted: strings(&p.coords),
            multiplicity: p.multiplicity.clone(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CertificateReport {
    #[serde(rename = "mz")]
    Mz { lambda0_size: usize, subsets_checked: u64, triples_checked: u64 },
    #[serde(rename = "fail-i")]
    FailI { subset: Vec<usize>, points: Vec<Vec<String>> },
    /// The monomial is in shifted coordinates.
    #[serde(rename = "fail-ii")]
    FailII {
        point: usize,
        coords: Vec<String>,
        monomial: Vec<u32>,
        monomial_text: String,
        functional: usize,
        value: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub gb_size: Option<usize>,
    pub input_dimension: usize,
    pub dimension: usize,
    pub eliminants: Vec<PolyReport>,
    pub input_vectors: usize,
    pub extra_vectors: usize,
    pub subspace_dimension: usize,
    pub dropped_vectors: usize,
    pub functionals: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleWitnessReport {
    pub subset: Vec<usize>,
    pub monomial: Vec<u32>,
    pub monomial_text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub variables: Vec<String>,
    pub is_mz: bool,
    pub witness: Option<OracleWitnessReport>,
    pub members: Vec<Vec<usize>>,
    pub subsets_checked: u64,
    /// Set when run alongside `decide`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
}

impl OracleReport {
    pub fn new(o: &OracleVerdict, names: &[String]) -> Self {
        OracleReport {
            variables: names.to_vec(),
            is_mz: o.is_mz,
            witness: o.witness.as_ref().map(|w| OracleWitnessReport {
                subset: one_based(&w.subset),
                monomial: w.monomial.exponents().to_vec(),
                monomial_text: monomial_text(&w.monomial, names),
            }),
            members: o.members.iter().map(|m| one_based(m)).collect(),
            subsets_checked: o.subsets_checked,
            agrees: None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "verdict: {}", if self.is_mz { "MZ" } else { "NOT-MZ" }).unwrap();
        writeln!(s, "subsets checked: {}", self.subsets_checked).unwrap();
        let members: Vec<String> = self.members.iter().map(|m| set_text(m)).collect();
        writeln!(s, "idempotents in V/I: {}", if members.is_empty() { "none".into() } else { members.join(" ") })
            .unwrap();
        if let Some(w) = &self.witness {
            writeln!(s, "witness: e = sum over {}, x^m = {}", set_text(&w.subset), w.monomial_text).unwrap();
        }
        if let Some(a) = self.agrees {
            writeln!(s, "agrees with decide: {a}").unwrap();
        }
        s
    }
}

/// Wall-clock stage durations in microseconds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub prepare_us: u64,
    pub functionals_us: u64,
    pub conditions_us: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_us: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub variables: Vec<String>,
    pub is_mz: bool,
    pub shift: Vec<String>,
    pub spectrum: Vec<PointReport>,
    pub lambda0: Vec<usize>,
    pub condition_i: String,
    pub condition_ii: String,
    pub certificate: CertificateReport,
    pub audit: AuditReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

fn set_text(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

impl VerdictReport {
    pub fn new(v: &Verdict, prep: &Prepared, names: &[String]) -> Self {
        let sp = &v.spectrum;
        let certificate = match &v.certificate {
            Certificate::Mz { lambda0_size, subsets_checked, triples_checked } => CertificateReport::Mz {
                lambda0_size: *lambda0_size,
                subsets_checked: *subsets_checked,
                triples_checked: *triples_checked,
            },
            Certificate::FailI { subset } => CertificateReport::FailI {
                subset: one_based(subset),
                points: subset.iter().map(|&l| strings(&sp.original_coords(l))).collect(),
            },
            Certificate::FailII { point, monomial, functional, value } => CertificateReport::FailII {
                point: point + 1,
                coords: strings(&sp.original_coords(*point)),
                monomial: monomial.exponents().to_vec(),
                monomial_text: monomial_text(monomial, names),
                functional: functional + 1,
                value: value.to_string(),
            },
        };
        let a = &v.audit;
        VerdictReport {
            variables: names.to_vec(),
            is_mz: v.is_mz,
            shift: strings(sp.shift()),
            spectrum: point_reports(sp),
            lambda0: one_based(&v.lambda0),
            condition_i: match v.condition_i {
                ConditionI::Pass { .. } => "pass".into(),
                ConditionI::Fail { .. } => "fail".into(),
            },
            condition_ii: match v.condition_ii {
                ConditionII::Pass { .. } => "pass".into(),
                ConditionII::Fail { .. } => "fail".into(),
            },
            certificate,
            audit: AuditReport {
                gb_size: a.input_basis_size,
                input_dimension: a.input_dimension,
                dimension: a.dimension,
                eliminants: prep
                    .eliminants
                    .iter()
                    .enumerate()
                    .map(|(i, f)| PolyReport::new(&f.to_multivariate(prep.nvars, i), names))
                    .collect(),
                input_vectors: a.input_vectors,
                extra_vectors: a.extra_vectors,
                subspace_dimension: a.subspace_dimension,
                dropped_vectors: a.dropped_vectors,
                functionals: a.functionals,
            },
            oracle: None,
            timings: None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "verdict: {}", if self.is_mz { "MZ" } else { "NOT-MZ" }).unwrap();
        match &self.certificate {
            CertificateReport::Mz { lambda0_size, subsets_checked, triples_checked } => writeln!(
                s,
                "certificate: MZ (|Λ0| = {lambda0_size}, {subsets_checked} subsets, {triples_checked} triples checked)"
            ),
            CertificateReport::FailI { subset, .. } => writeln!(s, "certificate: FAIL-i S = {}", set_text(subset)),
            CertificateReport::FailII { point, monomial_text, functional, value, .. } => writeln!(
                s,
                "certificate: FAIL-ii point {point}, monomial {monomial_text}, functional {functional}, value {value}"
            ),
        }
        .unwrap();
        writeln!(s, "variables: {}", self.variables.join(", ")).unwrap();
        writeln!(s, "shift: ({})", self.shift.join(", ")).unwrap();
        writeln!(s, "points:").unwrap();
        for p in &self.spectrum {
            let coords: Vec<String> = self.variables.iter().zip(&p.coords).map(|(n, c)| format!("{n} = {c}")).collect();
            let mult: Vec<String> = p.multiplicity.iter().map(ToString::to_string).collect();
            writeln!(s, "  {}: {} (multiplicity {})", p.index, coords.join(", "), mult.join(", ")).unwrap();
        }
        writeln!(s, "lambda0: {}", set_text(&self.lambda0)).unwrap();
        writeln!(s, "condition i: {}", self.condition_i).unwrap();
        writeln!(s, "condition ii: {}", self.condition_ii).unwrap();
        let a = &self.audit;
        if let Some(g) = a.gb_size {
            writeln!(s, "groebner basis size: {g}").unwrap();
        }
        writeln!(s, "dim k[x]/I: {}", a.input_dimension).unwrap();
        writeln!(s, "dim k[x]/J: {}", a.dimension).unwrap();
        for e in &a.eliminants {
            writeln!(s, "eliminant: {}", e.text).unwrap();
        }
        writeln!(
            s,
            "vectors: {} given, {} from I, dim V/J = {}, {} dropped",
            a.input_vectors, a.extra_vectors, a.subspace_dimension, a.dropped_vectors
        )
        .unwrap();
        writeln!(s, "functionals: {}", a.functionals).unwrap();
        if let Some(o) = &self.oracle {
            writeln!(s, "oracle: {}, agrees: {}", if o.is_mz { "MZ" } else { "NOT-MZ" }, o.agrees.unwrap_or(true))
                .unwrap();
        }
        if let Some(t) = &self.timings {
            writeln!(
                s,
                "timings (us): prepare {}, functionals {}, conditions {}",
                t.prepare_us, t.functionals_us, t.conditions_us
            )
            .unwrap();
            if let Some(o) = t.oracle_us {
                writeln!(s, "timings (us): oracle {o}").unwrap();
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbReport {
    pub variables: Vec<String>,
    pub order: String,
    pub basis: Vec<PolyReport>,
    pub leading_monomials: Vec<Vec<u32>>,
    /// `None` when the quotient is infinite dimensional.
    pub dimension: Option<usize>,
    pub staircase: Option<Vec<Vec<u32>>>,
}

impl GbReport {
    pub fn new(gb: &GroebnerBasis<Rational>, names: &[String]) -> Self {
        GbReport {
            variables: names.to_vec(),
            order: serde_json::to_value(gb.order()).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
            basis: gb.generators().iter().map(|g| PolyReport::new(g, names)).collect(),
            leading_monomials: gb.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect(),
            dimension: match gb.quotient_dimension() {
                Dimension::Finite(d) => Some(d),
                Dimension::Infinite => None,
            },
            staircase: gb.staircase().map(|s| s.iter().map(|m| m.exponents().to_vec()).collect()),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "order: {}", self.order).unwrap();
        writeln!(s, "basis:").unwrap();
        for g in &self.basis {
            writeln!(s, "  {}", g.text).unwrap();
        }
        match self.dimension {
            Some(d) => writeln!(s, "dimension: {d}").unwrap(),
            None => writeln!(s, "dimension: infinite").unwrap(),
        }
        if let Some(st) = &self.staircase {
            let ms: Vec<String> =
                st.iter().map(|e| monomial_text(&Monomial::new(e.clone()), &self.variables)).collect();
            writeln!(s, "staircase: {}", ms.join(", ")).unwrap();
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentReport {
    pub point: usize,
    /// `g_λ` in shifted coordinates, reduced.
    pub shifted: PolyReport,
    /// The same element in the original coordinates.
    pub original: PolyReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentsReport {
    pub variables: Vec<String>,
    pub shift: Vec<String>,
    pub spectrum: Vec<PointReport>,
    pub idempotents: Vec<IdempotentReport>,
    pub verified: bool,
}

impl IdempotentsReport {
    pub fn new(prep: &Prepared, family: &IdempotentFamily<Rational>, verified: bool, names: &[String]) -> Self {
        let sp = &prep.spectrum;
        IdempotentsReport {
            variables: names.to_vec(),
            shift: strings(sp.shift()),
            spectrum: point_reports(sp),
            idempotents: family
                .elements()
                .iter()
                .enumerate()
                .map(|(i, g)| IdempotentReport {
                    point: i + 1,
                    shifted: PolyReport::new(g, names),
                    original: PolyReport::new(&apply_shift(g, sp.shift(), ShiftDirection::Inverse), names),
                })
                .collect(),
            verified,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "shift: ({})", self.shift.join(", ")).unwrap();
        for (p, g) in self.spectrum.iter().zip(&self.idempotents) {
            let coords: Vec<String> = self.variables.iter().zip(&p.coords).map(|(n, c)| format!("{n} = {c}")).collect();
            writeln!(s, "point {}: {}", p.index, coords.join(", ")).unwrap();
            writeln!(s, "  g = {}", g.original.text).unwrap();
        }
        writeln!(s, "verified: {}", self.verified).unwrap();
        s
    }
}
