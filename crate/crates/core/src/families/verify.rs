use serde::Serialize;

use super::{ClaimedBasis, FamilyError};
use crate::graphs::Family;
use crate::groebner::{is_spair_closed, reduce_basis, same_elements, GroebnerBasis};
use crate::rees::ReesPresentation;
use crate::ring::Polynomial;

/// Comparison of a claimed basis with the computed reduced Gröbner basis.
/// `reduced_match`: the distinct claimed binomials are exactly the reduced
/// basis. `reduces_to_gb`: inter-reducing the claim gives the reduced basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub family: Family,
    pub claimed: usize,
    pub distinct: usize,
    pub gb_size: usize,
    pub membership_ok: bool,
    pub spair_ok: bool,
    pub initial_match: bool,
    pub reduced_match: bool,
    pub reduces_to_gb: bool,
    pub initials_quadratic: bool,
    /// Minimal generators of the computed initial ideal that are not claimed.
    pub missing_initials: Vec<String>,
    /// Claimed initials outside the computed initial ideal's minimal generators.
    pub extra_initials: Vec<String>,
    /// Reduced basis elements not among the claimed binomials.
    pub missing_elements: Vec<String>,
    /// Claimed binomials not in the reduced basis.
    pub extra_elements: Vec<String>,
}

pub fn verify_claim(claim: &ClaimedBasis, pres: &ReesPresentation) -> Result<VerificationReport, FamilyError> {
    if pres.ctx().names() != claim.ctx().names() || pres.order() != claim.order() {
        return Err(FamilyError::ContextMismatch);
    }
    let ctx = claim.ctx();
    let order = claim.order();
    let gb = pres.gb();
    let distinct = claim.distinct_binomials();

    let mut membership_ok = true;
    for f in &distinct {
        if !pres.pi(f)?.is_zero() || !gb.contains(f)? {
            membership_ok = false;
        }
    }
    let spair_ok = is_spair_closed(&distinct, order)?;

    let claimed = claim.claimed_initial_ideal();
    let computed = pres.initial_ideal();
    let missing_initials = computed.gens().iter().filter(|m| !claimed.gens().contains(m)).map(|m| m.render(ctx)).collect();
    let extra_initials = claimed.gens().iter().filter(|m| !computed.gens().contains(m)).map(|m| m.render(ctx)).collect();
    let initial_match = claimed == computed;

    let monic: Vec<Polynomial> = distinct.iter().map(|f| f.make_monic()).collect();
    let reduced_match = same_elements(&monic, gb.elements(), order);
    let reduces_to_gb = spair_ok
        && membership_ok
        && same_elements(
            reduce_basis(&GroebnerBasis::from_parts(monic.clone(), order.clone(), false))?.elements(),
            gb.elements(),
            order,
        );
    let missing_elements = gb.elements().iter().filter(|g| !monic.contains(g)).map(|g| g.render(ctx)).collect();
    let extra_elements = monic.iter().filter(|f| !gb.elements().contains(f)).map(|f| f.render(ctx)).collect();

    Ok(VerificationReport {
        family: claim.family.clone(),
        claimed: claim.binomials.len(),
        distinct: distinct.len(),
        gb_size: gb.len(),
        membership_ok,
        spair_ok,
        initial_match,
        reduced_match,
        reduces_to_gb,
        initials_quadratic: claim.initials_quadratic(),
        missing_initials,
        extra_initials,
        missing_elements,
        extra_elements,
    })
}
