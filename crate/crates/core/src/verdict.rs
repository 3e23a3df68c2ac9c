//! Top-level decision procedures: surjectivity of the Lefschetz
//! homomorphism and kernel membership for candidate h-mark functions.
//!
//! Verdicts carry their reasons. Every implemented criterion is one
//! directional, so `Unknown` is an honest outcome listing what was tried.

use crate::borel_smith::BsSystem;
use crate::classes::{controls_fusion, controls_fusion_weak, is_p_nilpotent, ClassTable, Scope};
use crate::error::{Error, Result};
use crate::group::{centralizer, normalizer, normalizer_in, FiniteGroup, Subgroup};
use crate::quotient::{quotient, small_group_shape, Shape};
use crate::signspace::p2_surjectivity;
use crate::superclass::SuperclassFunction;
use crate::tuples::reduced_tuple_group;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Surjective,
    NotSurjective,
    Unknown,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Reason {
    pub criterion: String,
    pub evidence: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub enum Certificate {
    /// Basis units of the stable unit space, each with a stable preimage.
    PreimageBasis(Vec<(Vec<i8>, Vec<i64>)>),
    /// A stable unit outside the image of the dimension homomorphism.
    MissingUnit(Vec<i8>),
    /// Minimal generator count of the tuple group vs. cyclic class count.
    GeneratorCount {
        min_generators: usize,
        cyclic_classes: usize,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub reasons: Vec<Reason>,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    fn reason(mut self, criterion: &str, evidence: String) -> Self {
        self.reasons.push(Reason {
            criterion: criterion.to_string(),
            evidence,
        });
        self
    }
}

/// Dispatches on p and the unit order m of the coefficient field:
/// - p = 2, m = 1: the exact linear-algebra criterion, with fusion-control
///   and dihedral-shape observations attached as corroboration;
/// - p = 2, m > 1: unknown unless every character component vanishes;
/// - p odd: cyclic Sylow or p-nilpotency give surjectivity; a tuple group
///   needing at least as many generators as there are cyclic classes rules
///   it out; otherwise unknown with both numbers reported.
pub fn lefschetz_verdict(group: &FiniteGroup, table: &ClassTable, m: u64) -> Result<Verdict> {
    let p = table.p;
    let mut verdict = Verdict {
        outcome: Outcome::Unknown,
        reasons: Vec::new(),
        certificate: None,
    };
    if p == 2 {
        if m > 1 {
            let all_trivial = (0..table.class_count(Scope::Group)).try_fold(
                true,
                |acc, class| -> Result<bool> {
                    let rep = table.rep_subgroup(class, Scope::Group);
                    let q = crate::quotient::automizer_reduced(group, rep)?;
                    let hom = crate::abelian::hom_to_roots(&q, m)?;
                    Ok(acc && hom.is_trivial())
                },
            )?;
            if !all_trivial {
                return Ok(verdict.reason(
                    "character-components",
                    format!(
                        "unit order {m} > 1 with nontrivial character components; \
                         no exact criterion applies"
                    ),
                ));
            }
            verdict = verdict.reason(
                "character-components",
                format!("all character components vanish at unit order {m}"),
            );
        }
        let out = p2_surjectivity(group, table)?;
        verdict = verdict.reason(
            "sign-lattice",
            format!(
                "image dimension {} vs stable unit dimension {}",
                out.image.dim(),
                out.stable_units.dim()
            ),
        );
        // corroborating observations
        let ns = normalizer(group, &table.sylow);
        let sylow = table.sylow.clone();
        let full_control = controls_fusion(group, &ns, &sylow, table)?;
        let weak_control = controls_fusion_weak(group, &ns, table)?;
        verdict = verdict.reason(
            "fusion-control",
            format!(
                "Sylow normalizer controls fusion: {full_control} \
                 (subgroup-level only: {weak_control})"
            ),
        );
        if sylow_is_dihedral(group, &table.sylow) {
            verdict = verdict.reason(
                "dihedral-sylow",
                "the Sylow 2-subgroup is dihedral of order at least 8".into(),
            );
        }
        if out.surjective {
            verdict.outcome = Outcome::Surjective;
            verdict.certificate = Some(Certificate::PreimageBasis(
                out.preimage_basis
                    .iter()
                    .map(|(u, f)| (u.signs(), f.values.clone()))
                    .collect(),
            ));
        } else {
            if full_control {
                return Err(Error::Internal(
                    "fusion control must force surjectivity".into(),
                ));
            }
            verdict.outcome = Outcome::NotSurjective;
            verdict.certificate = Some(Certificate::MissingUnit(
                out.missing_unit.as_ref().expect("witness present").signs(),
            ));
        }
        return Ok(verdict);
    }

    // odd p
    let sylow_cyclic = table.sylow.is_cyclic(group);
    if sylow_cyclic {
        let evidence = if table.sylow.is_trivial() {
            "Sylow p-subgroup is trivial".to_string()
        } else {
            format!(
                "cyclic Sylow p-subgroup of order {}; cohomological period {}",
                table.sylow.order(),
                period_cyclic(group, table)?
            )
        };
        verdict = verdict.reason("cyclic-sylow", evidence);
        verdict.outcome = Outcome::Surjective;
    }
    if is_p_nilpotent(table)? {
        verdict = verdict.reason(
            "p-nilpotent",
            "every automizer of a p-subgroup is a p-group".into(),
        );
        verdict.outcome = Outcome::Surjective;
    }
    let tg = reduced_tuple_group(group, table, m)?;
    let d = crate::abelian::min_generators(&tg.structure);
    let c = table.cyclic_class_count(Scope::Group);
    verdict = verdict.reason(
        "generator-count",
        format!(
            "tuple group {} needs {d} generators; {c} cyclic classes",
            tg.structure.describe()
        ),
    );
    if d >= c {
        if verdict.outcome == Outcome::Surjective {
            return Err(Error::Internal(
                "generator-count criterion contradicts a surjectivity criterion".into(),
            ));
        }
        verdict.outcome = Outcome::NotSurjective;
    }
    if verdict.outcome != Outcome::Unknown {
        verdict.certificate = Some(Certificate::GeneratorCount {
            min_generators: d,
            cyclic_classes: c,
        });
    }
    Ok(verdict)
}

fn sylow_is_dihedral(group: &FiniteGroup, sylow: &Subgroup) -> bool {
    if sylow.order() < 8 || !sylow.order().is_power_of_two() {
        return false;
    }
    // dihedral of order 2n: a cyclic subgroup of index 2 and an inverting
    // involution outside it
    let half = sylow.order() / 2;
    let Some(&rot) = sylow
        .elements()
        .iter()
        .find(|&&x| group.element_order(x) as usize == half)
    else {
        return false;
    };
    let rot_sub = group.subgroup_closure(&[rot]);
    sylow.elements().iter().any(|&t| {
        !rot_sub.contains(t) && group.element_order(t) == 2 && group.conj(t, rot) == group.inv(rot)
    })
}

/// For a nontrivial cyclic Sylow subgroup: twice the automizer order.
pub fn period_cyclic(group: &FiniteGroup, table: &ClassTable) -> Result<u64> {
    if !table.sylow.is_cyclic(group) || table.sylow.is_trivial() {
        return Err(Error::NotCyclicSylow { p: table.p });
    }
    let n = normalizer(group, &table.sylow);
    let c = centralizer(group, &table.sylow);
    Ok(2 * (n.order() / c.order()) as u64)
}

/// A candidate h-mark function: validated against the defining conditions at
/// construction; the trivial-homology flag is asserted by the caller, not
/// verified (complexes themselves are out of scope here).
#[derive(Debug, Clone)]
pub struct HMarkCandidate {
    pub h: SuperclassFunction,
    pub trivial_homology: bool,
}

impl HMarkCandidate {
    pub fn new(h: SuperclassFunction, system: &BsSystem, trivial_homology: bool) -> Result<Self> {
        let violations = system.check_superclass(&h);
        if let Some(v) = violations.first() {
            return Err(Error::NotBorelSmith(v.provenance.clone()));
        }
        Ok(HMarkCandidate {
            h,
            trivial_homology,
        })
    }
}

/// Exact kernel test for odd p with cyclic Sylow subgroup: all values even
/// and h(1) = h(P) modulo twice the period constant at every nontrivial
/// class.
pub fn kernel_membership_cyclic(
    group: &FiniteGroup,
    table: &ClassTable,
    cand: &HMarkCandidate,
) -> Result<bool> {
    if table.p == 2 {
        return Err(Error::Precondition(
            "the cyclic kernel test applies to odd p".into(),
        ));
    }
    require_trivial_homology(cand)?;
    let modulus = period_cyclic(group, table)?;
    let h = &cand.h.values;
    if h.iter().any(|v| v.rem_euclid(2) != 0) {
        return Ok(false);
    }
    Ok((1..table.class_count(Scope::Group)).all(|c| (h[0] - h[c]).rem_euclid(modulus as i64) == 0))
}

fn require_trivial_homology(cand: &HMarkCandidate) -> Result<()> {
    if !cand.trivial_homology {
        return Err(Error::Precondition(
            "kernel tests apply to candidates with trivial homology".into(),
        ));
    }
    Ok(())
}

/// One congruence checked by the general odd-p test.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CongruenceRecord {
    pub lower_class: usize,
    pub upper_class: usize,
    pub modulus: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct KernelCheck {
    /// p = 2: exact membership. p odd: necessary conditions hold.
    pub holds: bool,
    pub exact: bool,
    pub checked: Vec<CongruenceRecord>,
    pub violation: Option<String>,
}

/// p = 2: membership is exactly even-valuedness. Odd p: a necessary test;
/// for every index-p pair K < H inside the Sylow subgroup the difference of
/// values must vanish modulo twice the largest p'-subgroup order of the
/// automizer of H in N_G(K).
pub fn kernel_necessary(
    group: &FiniteGroup,
    table: &ClassTable,
    cand: &HMarkCandidate,
) -> Result<KernelCheck> {
    require_trivial_homology(cand)?;
    let h = &cand.h.values;
    if table.p == 2 {
        let even = h.iter().all(|v| v.rem_euclid(2) == 0);
        return Ok(KernelCheck {
            holds: even,
            exact: true,
            checked: Vec::new(),
            violation: (!even).then(|| "odd value present".to_string()),
        });
    }
    if h.iter().any(|v| v.rem_euclid(2) != 0) {
        return Ok(KernelCheck {
            holds: false,
            exact: false,
            checked: Vec::new(),
            violation: Some("odd value present".to_string()),
        });
    }
    let p = table.p as usize;
    let mut checked: Vec<CongruenceRecord> = Vec::new();
    let mut all_hold = true;
    let mut violation = None;
    let mut seen: std::collections::HashSet<(usize, usize, u64)> = Default::default();
    for (hi, upper) in table.subgroups.iter().enumerate() {
        for (ki, lower) in table.subgroups.iter().enumerate() {
            if lower.order() * p != upper.order() || !lower.is_subset_of(upper) {
                continue;
            }
            let n_k = normalizer(group, lower);
            let n_in = normalizer_in(group, &n_k, upper);
            let cent: Vec<usize> = n_in
                .elements()
                .iter()
                .copied()
                .filter(|&g| upper.gens().iter().all(|&x| group.conj(g, x) == x))
                .collect();
            let cent = group
                .subgroup_from_indices(cent)
                .expect("centralizer inside a normalizer is a subgroup");
            let auto = quotient(group, &n_in, &cent)?;
            let modulus = 2 * auto.group.max_p_prime_subgroup_order(table.p) as u64;
            let (kc, hc) = (table.g_class_of[ki], table.g_class_of[hi]);
            if !seen.insert((kc, hc, modulus)) {
                continue;
            }
            let holds = (h[kc] - h[hc]).rem_euclid(modulus as i64) == 0;
            checked.push(CongruenceRecord {
                lower_class: kc,
                upper_class: hc,
                modulus,
                holds,
            });
            if !holds && violation.is_none() {
                all_hold = false;
                violation = Some(format!(
                    "classes ({kc}, {hc}): {} - {} not divisible by {modulus}",
                    h[kc], h[hc]
                ));
            }
            all_hold = all_hold && holds;
        }
    }
    Ok(KernelCheck {
        holds: all_hold,
        exact: false,
        checked,
        violation,
    })
}

/// Shape tag of a quotient or subgroup of order at most 16, via the order
/// census (exposed for the CLI and tests).
pub fn shape_of_subgroup(group: &FiniteGroup, sub: &Subgroup) -> Result<Shape> {
    let q = quotient(group, sub, &group.trivial_subgroup())?;
    small_group_shape(&q.group)
}
