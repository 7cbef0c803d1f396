use super::{Family, Graph, GraphError};

/// The lex order on the vertices of a Cameron–Walker graph, largest first,
/// as printed. Vertex indices of [`cameron_walker`] follow this order.
pub const CW_ORDER_TEXT: &str = r"a_1^{(1)} > a_1^{(2)} > \cdots > a_1^{(p_1)} > a_2^{(1)} > \cdots > a_2^{(p_2)} > \cdots > a_n^{(1)} > \cdots > a_n^{(p_n)} > b_1^{(1)} > c_1^{(1)} > \cdots > b_1^{(q_1)} > c_1^{(q_1)} > \cdots > b_m^{(1)} > c_m^{(1)} > \cdots > b_m^{(q_m)} > c_m^{(q_m)} > \zeta_1 > \cdots > \zeta_m > \xi_1 > \cdots > \xi_n";

/// The path `P_n` on `x1, ..., xn` with edges `{i, i+1}`; covers are ordered lex `x1 > ... > xn`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameters("a path needs at least 2 vertices".into()));
    }
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(names, &edges)?.with_family(Family::Path { n }, (0..n).collect()))
}

/// `Γ_{p,q,r}`: complete graphs on `{x_i} ∪ {y_j}` and on `{x_i} ∪ {z_k}`.
/// Vertices are laid out `x1..xp, y1..yq, z1..zr`; the variable order is
/// `y_q > ... > y_1 > z_1 > ... > z_r > x_p > ... > x_1`.
pub fn biclique(p: usize, q: usize, r: usize) -> Result<Graph, GraphError> {
    if p == 0 || q == 0 || r == 0 {
        return Err(GraphError::InvalidParameters("biclique parameters must be at least 1".into()));
    }
    let mut names: Vec<String> = (1..=p).map(|i| format!("x{i}")).collect();
    names.extend((1..=q).map(|j| format!("y{j}")));
    names.extend((1..=r).map(|k| format!("z{k}")));
    let xs: Vec<usize> = (0..p).collect();
    let ys: Vec<usize> = (p..p + q).collect();
    let zs: Vec<usize> = (p + q..p + q + r).collect();
    let mut edges = Vec::new();
    for group in [&ys, &zs] {
        let clique: Vec<usize> = xs.iter().chain(group.iter()).copied().collect();
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                edges.push((u, v));
            }
        }
    }
    let mut order: Vec<usize> = ys.iter().rev().copied().collect();
    order.extend(zs.iter().copied());
    order.extend(xs.iter().rev().copied());
    Ok(Graph::new(names, &edges)?.with_family(Family::Biclique { p, q, r }, order))
}

/// Cameron–Walker graph with complete bipartite part `K_{n,m}`: vertex `xi_i`
/// carries `p[i]` leaves `a{i}_{k}`, vertex `zeta_j` carries `q[j]` pendant
/// triangles `{zeta_j, b{j}_{k}, c{j}_{k}}`. Vertices are indexed in the
/// order of [`CW_ORDER_TEXT`].
pub fn cameron_walker(p: &[usize], q: &[usize]) -> Result<Graph, GraphError> {
    if p.is_empty() || q.is_empty() {
        return Err(GraphError::InvalidParameters("Cameron–Walker graphs need n, m ≥ 1".into()));
    }
    if p.contains(&0) {
        return Err(GraphError::InvalidParameters("every xi needs at least one leaf".into()));
    }
    let (n, m) = (p.len(), q.len());
    let mut names = Vec::new();
    let mut leaves = vec![Vec::new(); n];
    for (i, &pi) in p.iter().enumerate() {
        for k in 1..=pi {
            leaves[i].push(names.len());
            names.push(format!("a{}_{}", i + 1, k));
        }
    }
    let mut triangles = vec![Vec::new(); m];
    for (j, &qj) in q.iter().enumerate() {
        for k in 1..=qj {
            let b = names.len();
            names.push(format!("b{}_{}", j + 1, k));
            names.push(format!("c{}_{}", j + 1, k));
            triangles[j].push((b, b + 1));
        }
    }
    let zeta: Vec<usize> = (names.len()..names.len() + m).collect();
    names.extend((1..=m).map(|j| format!("zeta{j}")));
    let xi: Vec<usize> = (names.len()..names.len() + n).collect();
    names.extend((1..=n).map(|i| format!("xi{i}")));
    let mut edges = Vec::new();
    for i in 0..n {
        for &a in &leaves[i] {
            edges.push((xi[i], a));
        }
        for &z in &zeta {
            edges.push((xi[i], z));
        }
    }
    for j in 0..m {
        for &(b, c) in &triangles[j] {
            edges.extend([(zeta[j], b), (zeta[j], c), (b, c)]);
        }
    }
    let total = names.len();
    Ok(Graph::new(names, &edges)?
        .with_family(Family::CameronWalker { p: p.to_vec(), q: q.to_vec() }, (0..total).collect()))
}

/// Vertex names of a Cameron–Walker graph from largest to smallest.
pub fn cw_variable_order(g: &Graph) -> Vec<String> {
    g.var_order().iter().map(|&v| g.name(v).to_string()).collect()
}
