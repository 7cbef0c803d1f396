use serde::Serialize;

use super::{Graph, GraphError};

/// Number of neighbours of `labeling[j]` among `labeling[..j]`.
pub fn back_degree(g: &Graph, labeling: &[usize], j: usize) -> usize {
    labeling[..j].iter().filter(|&&u| g.has_edge(labeling[j], u)).count()
}

/// `n − max_j |N(j) ∩ {1..j−1}|` for a perfect elimination ordering `labeling`
/// (vertex `labeling[k]` carries label `k + 1`).
pub fn depth_bound_a(g: &Graph, labeling: &[usize]) -> Result<usize, GraphError> {
    if !super::is_peo(g, labeling) {
        return Err(GraphError::NotPeo);
    }
    let worst = (0..g.n()).map(|j| back_degree(g, labeling, j)).max().unwrap_or(0);
    Ok(g.n() - worst)
}

/// Extremal values of `c(A)` (components of `G − A`) over vertex subsets `A`.
/// Fields without suffix range over all subsets; `_proper` excludes `A = [n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityProfile {
    /// `max (n − |A| + c(A))`.
    pub dim_sym: i64,
    /// `max (|A| − c(A))`.
    pub limit_upper_printed: i64,
    pub limit_upper_printed_proper: i64,
    /// `max (c(A) − |A|)`, equal to `dim_sym − n`.
    pub limit_upper_corrected: i64,
    pub limit_upper_corrected_proper: i64,
}

pub fn connectivity_profile(g: &Graph) -> Result<ConnectivityProfile, GraphError> {
    let n = g.n();
    if n > 24 {
        return Err(GraphError::InvalidParameters("subset enumeration is limited to 24 vertices".into()));
    }
    let all = g.all_mask();
    let (mut dim, mut printed, mut printed_p, mut corrected, mut corrected_p) =
        (i64::MIN, i64::MIN, i64::MIN, i64::MIN, i64::MIN);
    for a in 0..=all {
        let size = a.count_ones() as i64;
        let c = g.components_in(all & !a) as i64;
        dim = dim.max(n as i64 - size + c);
        printed = printed.max(size - c);
        corrected = corrected.max(c - size);
        if a != all {
            printed_p = printed_p.max(size - c);
            corrected_p = corrected_p.max(c - size);
        }
    }
    Ok(ConnectivityProfile {
        dim_sym: dim,
        limit_upper_printed: printed,
        limit_upper_printed_proper: printed_p,
        limit_upper_corrected: corrected,
        limit_upper_corrected_proper: corrected_p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::path;

    fn complete(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        Graph::numbered(n, &edges).unwrap()
    }

    #[test]
    fn depth_bounds() {
        let p = path(6).unwrap();
        assert_eq!(depth_bound_a(&p, &[0, 1, 2, 3, 4, 5]), Ok(5));
        assert_eq!(depth_bound_a(&complete(5), &[0, 1, 2, 3, 4]), Ok(1));
        assert_eq!(depth_bound_a(&complete(2), &[0, 1]), Ok(1));
        let c4 = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(depth_bound_a(&c4, &[0, 1, 2, 3]), Err(GraphError::NotPeo));
    }

    #[test]
    fn profiles() {
        let p3 = connectivity_profile(&path(3).unwrap()).unwrap();
        assert_eq!(p3.dim_sym, 4);
        let k2 = connectivity_profile(&complete(2)).unwrap();
        assert_eq!(k2.dim_sym, 3);
        assert_eq!(k2.limit_upper_corrected, 1);
        assert_eq!(k2.limit_upper_printed_proper, 0);
        assert_eq!(k2.limit_upper_printed, 2);
        for g in [path(5).unwrap(), complete(4)] {
            let pr = connectivity_profile(&g).unwrap();
            assert_eq!(pr.limit_upper_corrected, pr.dim_sym - g.n() as i64);
            assert!(pr.dim_sym >= g.n() as i64 + 1);
        }
    }
}
