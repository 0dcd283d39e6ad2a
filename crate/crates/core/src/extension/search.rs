use rayon::prelude::*;

use super::{obstruction, square_defect, surviving_term, test_element, CandidateSplitting, ExtensionL, LElt};
use crate::error::Result;
use crate::frobenius::Twist;
use crate::modules::{EElt, GradedModule};
use crate::ring::{Field, Fq, Poly};

/// Every candidate with `α ≤ alpha_max`: the identity first, then for each
/// `α` all `t = Σ c_i x^i y^{α−i}` with `c_0 ≠ 0`, in coefficient-code order.
pub fn enumerate_candidates(field: Field, alpha_max: u32) -> Vec<CandidateSplitting> {
    let elements: Vec<Fq> = field.elements().collect();
    let q = elements.len();
    let mut out = vec![CandidateSplitting::identity(field)];
    for alpha in 0..=alpha_max {
        let free = q.pow(alpha);
        for lead in field.nonzero_elements() {
            for mut code in 0..free {
                let mut t = Poly::monomial(lead, 0, alpha);
                for i in 1..=alpha {
                    t = t.add(&Poly::monomial(elements[code % q], i, alpha - i));
                    code /= q;
                }
                out.push(CandidateSplitting::new(alpha, t).expect("enumerated candidates are well formed"));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CandidateResult {
    pub candidate: CandidateSplitting,
    pub defect: LElt,
    /// Closed form, for the twist `u = y/x` only.
    pub obstruction: Option<EElt>,
    /// Defect equals `(0, obstruction)`.
    pub agrees: Option<bool>,
    /// The defect carries the uncancellable term.
    pub survives: Option<bool>,
}

impl CandidateResult {
    pub fn rejected(&self) -> bool {
        !self.defect.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub field: Field,
    pub alpha_max: u32,
    pub twist: Twist,
    pub results: Vec<CandidateResult>,
}

impl SearchReport {
    /// No candidate commutes with the structure maps.
    pub fn certified(&self) -> bool {
        self.results.iter().all(CandidateResult::rejected)
    }

    pub fn split_witness(&self) -> Option<&CandidateResult> {
        self.results.iter().find(|r| !r.rejected())
    }

    /// Full pipeline and closed form agree on every candidate.
    pub fn consistent(&self) -> bool {
        self.results.iter().all(|r| r.agrees != Some(false) && r.survives != Some(false))
    }
}

/// Runs every candidate through [`square_defect`] on its test element
/// `(φ_α, 1/(xy^{αp+2}))`.
pub fn splitting_search(field: Field, alpha_max: u32, twist: &Twist) -> Result<SearchReport> {
    let ext = ExtensionL::new(twist.clone());
    let standard_twist = *twist == Twist::y_over_x(field);
    let results = enumerate_candidates(field, alpha_max)
        .into_par_iter()
        .map(|g| {
            let defect = square_defect(&ext, &g, &test_element(field, g.alpha()))?;
            let (obstruction, agrees, survives) = if standard_twist {
                let ob = obstruction(&g);
                let agrees = defect.0.is_zero() && defect.1 == ob;
                let ((a, b), c) = surviving_term(&g).terms().next().expect("one term");
                (Some(ob), Some(agrees), Some(defect.1.coeff(a, b) == c))
            } else {
                (None, None, None)
            };
            Ok(CandidateResult { candidate: g, defect, obstruction, agrees, survives })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchReport { field, alpha_max, twist: twist.clone(), results })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_counts() {
        let f = Field::prime(2).unwrap();
        assert_eq!(enumerate_candidates(f, 3).len(), 16);
        for p in [3u64, 5] {
            let f = Field::prime(p).unwrap();
            let q = p as usize;
            let expected: usize = 1 + (0..=2).map(|a| (q - 1) * q.pow(a)).sum::<usize>();
            assert_eq!(enumerate_candidates(f, 2).len(), expected);
        }
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(enumerate_candidates(f4, 1).len(), 1 + 3 + 12);
    }

    #[test]
    fn small_searches() {
        for (p, alpha_max) in [(2, 3), (3, 2), (5, 1)] {
            let f = Field::prime(p).unwrap();
            let report = splitting_search(f, alpha_max, &Twist::y_over_x(f)).unwrap();
            assert!(report.certified());
            assert!(report.consistent());
        }
    }

    #[test]
    fn split_control_finds_identity() {
        let f = Field::prime(3).unwrap();
        let report = splitting_search(f, 1, &Twist::split(f)).unwrap();
        assert!(!report.certified());
        assert!(report.split_witness().unwrap().candidate.is_identity());
    }

    #[test]
    fn deterministic_order() {
        let f = Field::prime(3).unwrap();
        let a = splitting_search(f, 2, &Twist::y_over_x(f)).unwrap();
        let b = splitting_search(f, 2, &Twist::y_over_x(f)).unwrap();
        let names = |r: &SearchReport| r.results.iter().map(|c| c.candidate.to_string()).collect::<Vec<_>>();
        assert_eq!(names(&a), names(&b));
    }
}
