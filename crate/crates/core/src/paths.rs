//! Enumeration of paths, noncrossing tuples and pairs of tuples, together
//! with their exact weights, modified (vertex-product) weights and pattern
//! weights.
//!
//! Noncrossing means vertex-disjoint, shared endpoints included. Enumeration
//! is depth-first with reachability pruning and returns tuples in
//! lexicographic order of their vertex-id sequences, so results are
//! deterministic and suitable for golden tests.

use std::collections::BTreeSet;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::network::Network;

/// A path as a sequence of distinct vertex ids, consecutive ones joined by
/// an edge. A single vertex is a valid path of weight 1.
pub type Path = Vec<usize>;

/// An ordered tuple of paths.
pub type PathTuple = Vec<Path>;

/// A pattern `(I, J)`: the red source and sink positions, as 1-based index
/// sets inside `[2k-1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Pattern {
    pub i: BTreeSet<u32>,
    pub j: BTreeSet<u32>,
}

impl Pattern {
    pub fn new(i: impl IntoIterator<Item = u32>, j: impl IntoIterator<Item = u32>) -> Pattern {
        Pattern {
            i: i.into_iter().collect(),
            j: j.into_iter().collect(),
        }
    }

    /// Valid for a network of parameter `k`: both sides have k-1 members
    /// inside `[2k-1]`.
    pub fn validate(&self, k: u32) -> Result<()> {
        if k == 0 {
            return Err(Error::arg("plain graph has no patterns"));
        }
        let want = (k - 1) as usize;
        if self.i.len() != want || self.j.len() != want {
            return Err(Error::arg(format!(
                "pattern sides must have {want} members for k = {k}"
            )));
        }
        if self.i.iter().chain(&self.j).any(|&x| x < 1 || x > 2 * k - 1) {
            return Err(Error::arg("pattern members must lie in [1, 2k-1]"));
        }
        Ok(())
    }
}

/// Complement inside `[1, len]`.
pub fn complement(set: &BTreeSet<u32>, len: u32) -> BTreeSet<u32> {
    (1..=len).filter(|x| !set.contains(x)).collect()
}

/// A pair of internally noncrossing tuples: `red` of size k-1 connecting the
/// pattern `(I, J)`, `blue` of size k connecting the complementary pattern.
/// Red and blue may cross each other.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PncPair {
    pub red: PathTuple,
    pub blue: PathTuple,
}

/// Weight mode: edge products, or vertex products (the modified weight used
/// by birational RSK; each path weight is exactly the product of its visited
/// vertex weights, so no radicals are ever materialized).
pub enum WeightMode<'a> {
    Edge,
    /// Vertex weights indexed by vertex id.
    Vertex(&'a [Poly]),
}

/// Product of edge weights along a path; 1 for a single vertex.
pub fn path_weight(net: &Network, path: &[usize]) -> Poly {
    let mut w = Poly::one();
    for step in path.windows(2) {
        let e = net
            .edge_weight(step[0], step[1])
            .expect("consecutive path vertices joined by an edge");
        w = &w * e;
    }
    w
}

/// Product of vertex weights over the visited vertices.
pub fn path_hat_weight(path: &[usize], vertex_weights: &[Poly]) -> Poly {
    let mut w = Poly::one();
    for &v in path {
        w = &w * &vertex_weights[v];
    }
    w
}

pub fn tuple_weight(net: &Network, tuple: &PathTuple) -> Poly {
    tuple
        .iter()
        .fold(Poly::one(), |acc, p| &acc * &path_weight(net, p))
}

pub fn tuple_hat_weight(tuple: &PathTuple, vertex_weights: &[Poly]) -> Poly {
    tuple.iter().fold(Poly::one(), |acc, p| {
        &acc * &path_hat_weight(p, vertex_weights)
    })
}

pub fn pair_weight(net: &Network, pair: &PncPair) -> Poly {
    &tuple_weight(net, &pair.red) * &tuple_weight(net, &pair.blue)
}

pub fn pair_hat_weight(pair: &PncPair, vertex_weights: &[Poly]) -> Poly {
    &tuple_hat_weight(&pair.red, vertex_weights) * &tuple_hat_weight(&pair.blue, vertex_weights)
}

fn enumerate_paths_avoiding(
    net: &Network,
    from: usize,
    to: usize,
    used: &mut Vec<bool>,
    can_reach: &[bool],
    out: &mut Vec<Path>,
) {
    fn dfs(
        net: &Network,
        v: usize,
        to: usize,
        used: &mut Vec<bool>,
        can_reach: &[bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Path>,
    ) {
        if v == to {
            out.push(cur.clone());
            return;
        }
        for &(w, _) in net.out_neighbors(v) {
            if !used[w] && can_reach[w] {
                used[w] = true;
                cur.push(w);
                dfs(net, w, to, used, can_reach, cur, out);
                cur.pop();
                used[w] = false;
            }
        }
    }
    if used[from] || !can_reach[from] {
        return;
    }
    used[from] = true;
    let mut cur = vec![from];
    dfs(net, from, to, used, can_reach, &mut cur, out);
    used[from] = false;
}

/// All paths from `from` to `to`, in lexicographic order.
pub fn enumerate_paths(net: &Network, from: usize, to: usize) -> Vec<Path> {
    let can_reach = net.reach_to(&[to], None);
    let mut used = vec![false; net.n_vertices()];
    let mut out = Vec::new();
    enumerate_paths_avoiding(net, from, to, &mut used, &can_reach, &mut out);
    out
}

/// Complete, duplicate-free enumeration of noncrossing tuples connecting
/// `xs[i]` to `ys[i]`. Empty when some vertex repeats within `xs` or within
/// `ys`. The empty connection problem has exactly one solution: the empty
/// tuple.
pub fn enumerate_nc_tuples(net: &Network, xs: &[usize], ys: &[usize]) -> Result<Vec<PathTuple>> {
    if xs.len() != ys.len() {
        return Err(Error::arg("source and sink sequences differ in length"));
    }
    let distinct = |s: &[usize]| s.iter().collect::<BTreeSet<_>>().len() == s.len();
    if !distinct(xs) || !distinct(ys) {
        return Ok(Vec::new());
    }
    fn rec(
        net: &Network,
        xs: &[usize],
        ys: &[usize],
        reach: &[Vec<bool>],
        i: usize,
        used: &mut Vec<bool>,
        current: &mut PathTuple,
        tuples: &mut Vec<PathTuple>,
    ) {
        if i == xs.len() {
            tuples.push(current.clone());
            return;
        }
        let mut paths = Vec::new();
        enumerate_paths_avoiding(net, xs[i], ys[i], used, &reach[i], &mut paths);
        for p in paths {
            for &v in &p {
                used[v] = true;
            }
            current.push(p);
            rec(net, xs, ys, reach, i + 1, used, current, tuples);
            let p = current.pop().unwrap();
            for &v in &p {
                used[v] = false;
            }
        }
    }
    let reach: Vec<Vec<bool>> = ys.iter().map(|&t| net.reach_to(&[t], None)).collect();
    let mut used = vec![false; net.n_vertices()];
    let mut tuples = Vec::new();
    let mut current: PathTuple = Vec::new();
    rec(net, xs, ys, &reach, 0, &mut used, &mut current, &mut tuples);
    Ok(tuples)
}

/// Source/sink vertex sequences selected by 1-based boundary index sets.
pub fn boundary_vertices(net: &Network, side_sources: bool, set: &BTreeSet<u32>) -> Vec<usize> {
    set.iter()
        .map(|&i| {
            if side_sources {
                net.source(i)
            } else {
                net.sink(i)
            }
        })
        .collect()
}

/// Noncrossing tuples of type `(I, J)`: paths from the selected sources to
/// the selected sinks in increasing index order.
pub fn enumerate_nc_of_type(
    net: &Network,
    i_set: &BTreeSet<u32>,
    j_set: &BTreeSet<u32>,
) -> Result<Vec<PathTuple>> {
    if i_set.len() != j_set.len() {
        return Err(Error::arg("pattern sides differ in length"));
    }
    let xs = boundary_vertices(net, true, i_set);
    let ys = boundary_vertices(net, false, j_set);
    enumerate_nc_tuples(net, &xs, &ys)
}

/// The full set of pairs of type `(I, J)`: the Cartesian product of the red
/// enumeration with the complementary blue enumeration.
pub fn enumerate_pnc(net: &Network, pattern: &Pattern) -> Result<Vec<PncPair>> {
    pattern.validate(net.k())?;
    let len = net.boundary_len() as u32;
    let reds = enumerate_nc_of_type(net, &pattern.i, &pattern.j)?;
    let blues = enumerate_nc_of_type(
        net,
        &complement(&pattern.i, len),
        &complement(&pattern.j, len),
    )?;
    let mut pairs = Vec::with_capacity(reds.len() * blues.len());
    for r in &reds {
        for b in &blues {
            pairs.push(PncPair {
                red: r.clone(),
                blue: b.clone(),
            });
        }
    }
    Ok(pairs)
}

/// Exact pattern weight: the sum over all pairs of type `(I, J)`, computed
/// multiplicatively as (sum over red tuples) * (sum over blue tuples).
pub fn pattern_weight(net: &Network, pattern: &Pattern, mode: &WeightMode) -> Result<Poly> {
    pattern.validate(net.k())?;
    let len = net.boundary_len() as u32;
    let side = |i_set: &BTreeSet<u32>, j_set: &BTreeSet<u32>| -> Result<Poly> {
        let tuples = enumerate_nc_of_type(net, i_set, j_set)?;
        let mut sum = Poly::zero();
        for t in &tuples {
            sum += &match mode {
                WeightMode::Edge => tuple_weight(net, t),
                WeightMode::Vertex(vw) => tuple_hat_weight(t, vw),
            };
        }
        Ok(sum)
    };
    let red = side(&pattern.i, &pattern.j)?;
    let blue = side(&complement(&pattern.i, len), &complement(&pattern.j, len))?;
    Ok(&red * &blue)
}

/// Sum of edge-product weights over all single paths `s -> t`, by dynamic
/// programming over a topological order.
pub fn path_weight_sum(net: &Network, from: usize, to: usize) -> Poly {
    let order = net.topo_order().expect("network is acyclic");
    let mut acc: Vec<Poly> = vec![Poly::zero(); net.n_vertices()];
    acc[from] = Poly::one();
    for &v in &order {
        if acc[v].is_zero() {
            continue;
        }
        let base = acc[v].clone();
        for &(w, ref weight) in net.out_neighbors(v) {
            let add = &base * weight;
            acc[w] += &add;
        }
    }
    acc[to].clone()
}

/// Sum of vertex-product weights over all single paths `s -> t`.
pub fn path_hat_weight_sum(net: &Network, from: usize, to: usize, vertex_weights: &[Poly]) -> Poly {
    let order = net.topo_order().expect("network is acyclic");
    let mut acc: Vec<Poly> = vec![Poly::zero(); net.n_vertices()];
    acc[from] = vertex_weights[from].clone();
    for &v in &order {
        if acc[v].is_zero() {
            continue;
        }
        let base = acc[v].clone();
        for &(w, _) in net.out_neighbors(v) {
            let add = &base * &vertex_weights[w];
            acc[w] += &add;
        }
    }
    acc[to].clone()
}

/// Validate that a pair is a genuine element of `PNCPath(I, J)`: endpoints
/// match the pattern, consecutive vertices are edges, and each tuple is
/// internally vertex-disjoint.
pub fn validate_pair(net: &Network, pattern: &Pattern, pair: &PncPair) -> Result<()> {
    pattern.validate(net.k())?;
    let len = net.boundary_len() as u32;
    let check_tuple =
        |tuple: &PathTuple, i_set: &BTreeSet<u32>, j_set: &BTreeSet<u32>| -> Result<()> {
            let xs = boundary_vertices(net, true, i_set);
            let ys = boundary_vertices(net, false, j_set);
            if tuple.len() != xs.len() {
                return Err(Error::arg("tuple size does not match pattern"));
            }
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            for (idx, path) in tuple.iter().enumerate() {
                if path.is_empty() {
                    return Err(Error::arg("empty path"));
                }
                if path[0] != xs[idx] || path[path.len() - 1] != ys[idx] {
                    return Err(Error::arg(format!(
                        "path {idx} does not connect its assigned source and sink"
                    )));
                }
                for step in path.windows(2) {
                    if net.edge_weight(step[0], step[1]).is_none() {
                        return Err(Error::arg("path uses a missing edge"));
                    }
                }
                for &v in path {
                    if !seen.insert(v) {
                        return Err(Error::arg(format!(
                            "tuple is crossing: vertex {} shared",
                            net.fmt_vertex(v)
                        )));
                    }
                }
            }
            Ok(())
        };
    check_tuple(&pair.red, &pattern.i, &pattern.j)?;
    check_tuple(
        &pair.blue,
        &complement(&pattern.i, len),
        &complement(&pattern.j, len),
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{grid_network_seeded, grid_network_unit, plain_grid, Network};
    use num::{BigRational, FromPrimitive};

    fn rat_poly(n: i64) -> Poly {
        Poly::constant(BigRational::from_i64(n).unwrap())
    }

    /// Independent count oracle: determinant of the single-path count matrix
    /// (valid on the grid families, where noncrossing tuples only connect
    /// sources and sinks in order).
    fn lgv_count(net: &Network, xs: &[usize], ys: &[usize]) -> i128 {
        let n = xs.len();
        let mut m = vec![vec![0i128; n]; n];
        for (a, &s) in xs.iter().enumerate() {
            for (b, &t) in ys.iter().enumerate() {
                m[a][b] = i128::try_from(
                    path_weight_sum(net, s, t)
                        .as_constant()
                        .unwrap()
                        .to_integer(),
                )
                .unwrap();
            }
        }
        fn det(m: &Vec<Vec<i128>>) -> i128 {
            let n = m.len();
            if n == 0 {
                return 1;
            }
            let mut acc = 0i128;
            for c in 0..n {
                let minor: Vec<Vec<i128>> = (1..n)
                    .map(|r| (0..n).filter(|&cc| cc != c).map(|cc| m[r][cc]).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                acc += sign * m[0][c] * det(&minor);
            }
            acc
        }
        det(&m)
    }

    #[test]
    fn single_source_sink_enumeration_counts_binomial() {
        let g = plain_grid(3, 3).unwrap();
        let s = g.vertex_by_coord((1, 1)).unwrap();
        let t = g.vertex_by_coord((3, 3)).unwrap();
        let tuples = enumerate_nc_tuples(&g, &[s], &[t]).unwrap();
        assert_eq!(tuples.len(), 6); // C(4, 2)
        assert!(
            tuples.windows(2).all(|w| w[0] < w[1]),
            "lexicographic order"
        );
        assert_eq!(path_weight_sum(&g, s, t), rat_poly(6));
    }

    #[test]
    fn empty_connection_problem_has_one_empty_tuple() {
        let g = plain_grid(2, 2).unwrap();
        let tuples = enumerate_nc_tuples(&g, &[], &[]).unwrap();
        assert_eq!(tuples, vec![Vec::<Path>::new()]);
        assert!(tuple_weight(&g, &tuples[0]).is_one());
    }

    #[test]
    fn repeated_selection_is_empty() {
        let g = plain_grid(3, 3).unwrap();
        let s = g.vertex_by_coord((1, 1)).unwrap();
        let t1 = g.vertex_by_coord((3, 3)).unwrap();
        let t2 = g.vertex_by_coord((2, 3)).unwrap();
        assert!(enumerate_nc_tuples(&g, &[s, s], &[t1, t2])
            .unwrap()
            .is_empty());
        assert!(enumerate_nc_tuples(&g, &[s], &[t1, t2]).is_err());
    }

    #[test]
    fn single_vertex_path_has_weight_one() {
        let g = plain_grid(2, 2).unwrap();
        let v = g.vertex_by_coord((1, 1)).unwrap();
        let tuples = enumerate_nc_tuples(&g, &[v], &[v]).unwrap();
        assert_eq!(tuples, vec![vec![vec![v]]]);
        assert!(path_weight(&g, &[v]).is_one());
    }

    #[test]
    fn enumeration_cardinality_matches_lgv_count_oracle() {
        for (m, n, k) in [(4u32, 4, 2), (5, 5, 2), (5, 5, 3), (6, 6, 3)] {
            let g = grid_network_unit(m, n, k).unwrap();
            let len = 2 * k - 1;
            let evens: BTreeSet<u32> = (1..=len).filter(|x| x % 2 == 0).collect();
            let odds: BTreeSet<u32> = (1..=len).filter(|x| x % 2 == 1).collect();
            let odds_head: BTreeSet<u32> = odds.iter().copied().take(evens.len()).collect();
            for (i_set, j_set) in [(&evens, &evens), (&odds, &odds), (&evens, &odds_head)] {
                let xs = boundary_vertices(&g, true, i_set);
                let ys = boundary_vertices(&g, false, j_set);
                let got = enumerate_nc_tuples(&g, &xs, &ys).unwrap().len() as i128;
                assert_eq!(got, lgv_count(&g, &xs, &ys), "{m}x{n} k={k}");
            }
        }
    }

    #[test]
    fn pattern_weight_is_multiplicative_and_matches_pairs() {
        let g = grid_network_seeded(4, 4, 2, 3).unwrap();
        let pattern = Pattern::new([2], [2]);
        let pairs = enumerate_pnc(&g, &pattern).unwrap();
        let mut total = Poly::zero();
        for p in &pairs {
            total += &pair_weight(&g, p);
        }
        let fast = pattern_weight(&g, &pattern, &WeightMode::Edge).unwrap();
        assert_eq!(total, fast);
    }

    #[test]
    fn pattern_weight_zero_iff_no_pairs() {
        let g = grid_network_unit(4, 4, 2).unwrap();
        let pattern = Pattern::new([3], [1]);
        let w = pattern_weight(&g, &pattern, &WeightMode::Edge).unwrap();
        let pairs = enumerate_pnc(&g, &pattern).unwrap();
        assert_eq!(pairs.is_empty(), w.is_zero());
    }

    #[test]
    fn hat_weight_is_the_vertex_product() {
        let g = plain_grid(2, 2).unwrap();
        let vw: Vec<Poly> = (0..g.n_vertices())
            .map(|v| {
                let (r, c) = g.coord(v).unwrap();
                Poly::var((10 * r + c) as u32)
            })
            .collect();
        let a = g.vertex_by_coord((1, 1)).unwrap();
        let b = g.vertex_by_coord((1, 2)).unwrap();
        assert_eq!(
            path_hat_weight(&[a, b], &vw),
            &Poly::var(11) * &Poly::var(12)
        );
        let ones: Vec<Poly> = (0..g.n_vertices()).map(|_| Poly::one()).collect();
        let c21 = g.vertex_by_coord((2, 1)).unwrap();
        let d = g.vertex_by_coord((2, 2)).unwrap();
        assert!(path_hat_weight(&[a, c21, d], &ones).is_one());
    }
}
