//! `Γ_{p,q,r}`. The Rees variables are `phi{i}` for `g_i = (x/x_i) y z` and
//! `psi{j}_{k}` for `f_j^k = x (y/y_j) (z/z_k)`, ordered lex
//! `φ_1 > ... > φ_p > ψ_1^r > ... > ψ_1^1 > ψ_2^r > ... > ψ_q^1`; the base
//! variables are ordered lex `y_q > ... > y_1 > z_1 > ... > z_r > x_p > ... > x_1`.

use super::{ClaimedBasis, FamilyError};
use crate::graphs::biclique;
use crate::rees::{X_BLOCK, Y_BLOCK};
use crate::ring::OrderSpec;

/// The four binomial families of the reduced Gröbner basis and their initial monomials.
pub fn biclique_claimed(p: usize, q: usize, r: usize) -> Result<ClaimedBasis, FamilyError> {
    let g = biclique(p, q, r)?;
    let all = g.all_mask();
    let x = |i: usize| 1u64 << (i - 1);
    let y = |j: usize| 1u64 << (p + j - 1);
    let z = |k: usize| 1u64 << (p + q + k - 1);

    let mut covers = Vec::new();
    let mut names = Vec::new();
    for i in 1..=p {
        covers.push(all & !x(i));
        names.push(format!("phi{i}"));
    }
    // psi[j][k] is the position of ψ_j^k among the Rees variables.
    let mut psi = vec![vec![0; r + 1]; q + 1];
    for j in 1..=q {
        for k in (1..=r).rev() {
            psi[j][k] = covers.len();
            covers.push(all & !y(j) & !z(k));
            names.push(format!("psi{j}_{k}"));
        }
    }
    let phi = |i: usize| i - 1;
    let base_order: Vec<String> = g.var_order().iter().map(|&v| g.name(v).to_string()).collect();
    let spec = OrderSpec::Block(vec![
        (Y_BLOCK.to_string(), OrderSpec::Lex(names.clone())),
        (X_BLOCK.to_string(), OrderSpec::Lex(base_order)),
    ]);
    let mut claim = ClaimedBasis::setup(&g, &covers, names, spec)?;
    let mut initials = Vec::new();

    for i in 1..=p {
        let lead = claim.mono(x(i), &[phi(i)]);
        initials.push(lead.clone());
        claim.push("biclique-x", lead, claim.mono(y(q) | z(1), &[psi[q][1]]))?;
    }
    for j in 1..q {
        for k in 1..=r {
            let lead = claim.mono(y(j), &[psi[j][k]]);
            initials.push(lead.clone());
            claim.push("biclique-y", lead, claim.mono(y(q), &[psi[q][k]]))?;
        }
    }
    for j in 1..=q {
        for k in 2..=r {
            let lead = claim.mono(z(k), &[psi[j][k]]);
            initials.push(lead.clone());
            claim.push("biclique-z", lead, claim.mono(z(1), &[psi[j][1]]))?;
        }
    }
    for j1 in 1..=q {
        for j2 in j1 + 1..=q {
            for k1 in 1..=r {
                for k2 in k1 + 1..=r {
                    let lead = claim.mono(0, &[psi[j1][k2], psi[j2][k1]]);
                    initials.push(lead.clone());
                    claim.push("biclique-psi", lead, claim.mono(0, &[psi[j1][k1], psi[j2][k2]]))?;
                }
            }
        }
    }
    claim.set_initials(initials);
    Ok(claim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(biclique_claimed(2, 3, 2).unwrap().binomials.len(), 12);
        let c = biclique_claimed(1, 1, 1).unwrap();
        assert_eq!(c.render(), vec!["biclique-x: x1*phi1 - y1*z1*psi1_1"]);
    }

    #[test]
    fn balanced_and_quadratic() {
        for (p, q, r) in [(2, 2, 2), (2, 3, 2), (3, 2, 2)] {
            let c = biclique_claimed(p, q, r).unwrap();
            assert!(c.binomials_balanced());
            assert!(c.initials_quadratic());
            assert_eq!(c.claimed_initials.len(), c.binomials.len());
        }
    }
}
