//! Planar acyclic edge-weighted directed graphs with ordered source and sink
//! tuples, constructors for the grid families used throughout the crate, and
//! decision procedures for the bottleneck and interlacing properties.
//!
//! The internal representation is a pure digraph; each constructor records
//! its coordinate convention as metadata used only for rendering. Builders
//! certify the boundary order by construction; networks read from text are
//! flagged as having an unverified embedding.

use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{parse_poly, random_positive_rat, Poly};
use crate::error::{Error, Result};

/// Coordinate convention attached to a network, for rendering only.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    /// `(row, col)` with edges directed down and right.
    MatrixRowCol,
    /// `(x, y)` with edges directed left and down.
    CartesianXY,
    /// No embedded coordinates.
    Abstract,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub id: usize,
    pub coord: Option<(i32, i32)>,
}

/// Bottleneck witness: `n` for the k-bottleneck, `nt` for the
/// (k-1)-sink-bottleneck. Both are vertex-id sets.
#[derive(Clone, Debug, Default)]
pub struct BottleneckWitness {
    pub n: Option<BTreeSet<usize>>,
    pub nt: Option<BTreeSet<usize>>,
}

/// A network: a finite acyclic edge-weighted digraph together with ordered
/// source and sink tuples of length `2k-1`. `k = 0` denotes a plain graph
/// with no boundary structure (used for the RSK grids).
#[derive(Clone, Debug)]
pub struct Network {
    vertices: Vec<Vertex>,
    out: Vec<Vec<(usize, Poly)>>,
    inn: Vec<Vec<(usize, Poly)>>,
    k: u32,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    pub convention: Convention,
    pub embedding_verified: bool,
    pub witness: Option<BottleneckWitness>,
    coord_index: BTreeMap<(i32, i32), usize>,
}

/// Flags reported by [`Network::check_properties`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub non_returning_ok: bool,
    pub sink_branching_ok: bool,
    pub k_bottlenecked: bool,
    pub sink_bottlenecked: bool,
    pub interlacing: bool,
    /// Human-readable witness for the first falsified flag, if any.
    pub counterexample: Option<String>,
}

impl Network {
    /// Build and validate a network. `edges` are `(src, dst, weight)` with
    /// vertex ids indexing `vertices`; parallel edges are rejected.
    pub fn new(
        vertices: Vec<Vertex>,
        edges: Vec<(usize, usize, Poly)>,
        k: u32,
        sources: Vec<usize>,
        sinks: Vec<usize>,
        convention: Convention,
    ) -> Result<Network> {
        let nv = vertices.len();
        for (i, v) in vertices.iter().enumerate() {
            if v.id != i {
                return Err(Error::construction("vertex ids must be 0..n in order"));
            }
        }
        let mut out: Vec<Vec<(usize, Poly)>> = vec![Vec::new(); nv];
        let mut inn: Vec<Vec<(usize, Poly)>> = vec![Vec::new(); nv];
        let mut seen = BTreeSet::new();
        for (u, v, w) in edges {
            if u >= nv || v >= nv {
                return Err(Error::construction("edge endpoint out of range"));
            }
            if u == v {
                return Err(Error::construction("self-loop"));
            }
            if !seen.insert((u, v)) {
                return Err(Error::construction("parallel edge"));
            }
            if !w.is_coefficient_positive() {
                return Err(Error::construction(format!(
                    "edge weight must be positive: {}",
                    w.render(false)
                )));
            }
            out[u].push((v, w.clone()));
            inn[v].push((u, w));
        }
        for l in out.iter_mut().chain(inn.iter_mut()) {
            l.sort_by_key(|&(v, _)| v);
        }
        if k == 0 {
            if !(sources.is_empty() && sinks.is_empty()) {
                return Err(Error::construction("plain graph cannot carry boundary"));
            }
        } else {
            let want = (2 * k - 1) as usize;
            if sources.len() != want || sinks.len() != want {
                return Err(Error::construction(format!(
                    "need {want} sources and sinks for k = {k}"
                )));
            }
            if sources.iter().chain(&sinks).any(|&v| v >= nv) {
                return Err(Error::construction("boundary vertex out of range"));
            }
        }
        let mut coord_index = BTreeMap::new();
        for v in &vertices {
            if let Some(c) = v.coord {
                if coord_index.insert(c, v.id).is_some() {
                    return Err(Error::construction("duplicate coordinate"));
                }
            }
        }
        let net = Network {
            vertices,
            out,
            inn,
            k,
            sources,
            sinks,
            convention,
            embedding_verified: false,
            witness: None,
            coord_index,
        };
        if net.topo_order().is_none() {
            return Err(Error::construction("edge relation has a cycle"));
        }
        Ok(net)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.out.iter().map(|l| l.len()).sum()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Boundary tuple length `2k - 1`.
    pub fn boundary_len(&self) -> usize {
        if self.k == 0 {
            0
        } else {
            (2 * self.k - 1) as usize
        }
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    /// 1-based access matching the usual indexing `s_1 ... s_{2k-1}`.
    pub fn source(&self, i: u32) -> usize {
        self.sources[(i - 1) as usize]
    }

    pub fn sink(&self, j: u32) -> usize {
        self.sinks[(j - 1) as usize]
    }

    pub fn coord(&self, id: usize) -> Option<(i32, i32)> {
        self.vertices[id].coord
    }

    pub fn vertex_by_coord(&self, c: (i32, i32)) -> Option<usize> {
        self.coord_index.get(&c).copied()
    }

    pub fn out_neighbors(&self, id: usize) -> &[(usize, Poly)] {
        &self.out[id]
    }

    pub fn in_neighbors(&self, id: usize) -> &[(usize, Poly)] {
        &self.inn[id]
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> Option<&Poly> {
        self.out[u]
            .binary_search_by_key(&v, |&(t, _)| t)
            .ok()
            .map(|i| &self.out[u][i].1)
    }

    pub fn fmt_vertex(&self, id: usize) -> String {
        match self.vertices[id].coord {
            Some((a, b)) => format!("({a},{b})"),
            None => format!("v{id}"),
        }
    }

    /// Kahn topological order; `None` if a cycle exists.
    pub fn topo_order(&self) -> Option<Vec<usize>> {
        let n = self.n_vertices();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.inn[v].len()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            order.push(v);
            for &(w, _) in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Vertices reachable from `starts` (inclusive), never stepping onto a
    /// banned vertex; banned start vertices are not expanded.
    pub fn reach_from(&self, starts: &[usize], banned: Option<&[bool]>) -> Vec<bool> {
        let mut seen = vec![false; self.n_vertices()];
        let mut stack = Vec::new();
        for &s in starts {
            if banned.map(|b| b[s]).unwrap_or(false) {
                continue;
            }
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.out[v] {
                if !seen[w] && !banned.map(|b| b[w]).unwrap_or(false) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Vertices that can reach `targets` (inclusive).
    pub fn reach_to(&self, targets: &[usize], banned: Option<&[bool]>) -> Vec<bool> {
        let mut seen = vec![false; self.n_vertices()];
        let mut stack = Vec::new();
        for &t in targets {
            if banned.map(|b| b[t]).unwrap_or(false) {
                continue;
            }
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.inn[v] {
                if !seen[u] && !banned.map(|b| b[u]).unwrap_or(false) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    fn mask(&self, set: &BTreeSet<usize>) -> Vec<bool> {
        let mut m = vec![false; self.n_vertices()];
        for &v in set {
            m[v] = true;
        }
        m
    }

    /// Non-returning: every path between two members of `set` stays inside
    /// `set`. Returns an offending vertex outside the set if violated.
    /// (In a DAG a walk from a member through `w` back to a member is
    /// automatically a path, so reachability suffices.)
    pub fn non_returning_violation(&self, set: &BTreeSet<usize>) -> Option<usize> {
        let members: Vec<usize> = set.iter().copied().collect();
        let from = self.reach_from(&members, None);
        let to = self.reach_to(&members, None);
        (0..self.n_vertices()).find(|&w| !set.contains(&w) && from[w] && to[w])
    }

    fn interior_sinks(&self) -> Vec<usize> {
        let m = self.boundary_len();
        (1..m.saturating_sub(1)).map(|j| self.sinks[j]).collect()
    }

    fn boundary_sinks(&self) -> Vec<usize> {
        let m = self.boundary_len();
        match m {
            0 => Vec::new(),
            1 => vec![self.sinks[0]],
            _ => vec![self.sinks[0], self.sinks[m - 1]],
        }
    }

    /// Sink-branching: no member routes to both an interior sink and a
    /// boundary sink through a shared later vertex.
    pub fn sink_branching_violation(&self, set: &BTreeSet<usize>) -> Option<(usize, usize)> {
        let to_interior = self.reach_to(&self.interior_sinks(), None);
        let to_boundary = self.reach_to(&self.boundary_sinks(), None);
        for &u in set {
            let from_u = self.reach_from(&[u], None);
            for w in 0..self.n_vertices() {
                if w != u && from_u[w] && to_interior[w] && to_boundary[w] {
                    return Some((u, w));
                }
            }
        }
        None
    }

    /// Hitting: every path from a source to one of `targets` meets `set`.
    /// Returns a violating (source, target) pair otherwise.
    fn hitting_violation(
        &self,
        set: &BTreeSet<usize>,
        targets: &[usize],
    ) -> Option<(usize, usize)> {
        let banned = self.mask(set);
        for &s in &self.sources {
            if set.contains(&s) {
                continue;
            }
            let from = self.reach_from(&[s], Some(&banned));
            for &t in targets {
                if !set.contains(&t) && from[t] {
                    return Some((s, t));
                }
            }
        }
        None
    }

    /// Verify a bottleneck witness (the supplied one, else the stored one),
    /// or brute-force search for one over at most 20 candidate vertices.
    pub fn check_properties(&self, witness: Option<&BottleneckWitness>) -> Result<PropertyReport> {
        self.check_properties_with_cap(witness, 20)
    }

    pub fn check_properties_with_cap(
        &self,
        witness: Option<&BottleneckWitness>,
        search_cap: usize,
    ) -> Result<PropertyReport> {
        if self.k == 0 {
            return Err(Error::arg("plain graph has no boundary structure"));
        }
        let witness = match witness {
            Some(w) => w.clone(),
            None => match &self.witness {
                Some(w) => w.clone(),
                None => self.search_witness(search_cap)?,
            },
        };
        let mut report = PropertyReport {
            non_returning_ok: true,
            sink_branching_ok: true,
            k_bottlenecked: false,
            sink_bottlenecked: false,
            interlacing: false,
            counterexample: None,
        };
        fn note(report: &mut PropertyReport, msg: String) {
            if report.counterexample.is_none() {
                report.counterexample = Some(msg);
            }
        }
        if let Some(n) = &witness.n {
            if n.len() > self.k as usize {
                note(
                    &mut report,
                    format!("|N| = {} exceeds k = {}", n.len(), self.k),
                );
            } else {
                let mut ok = true;
                if let Some(w) = self.non_returning_violation(n) {
                    report.non_returning_ok = false;
                    ok = false;
                    note(
                        &mut report,
                        format!(
                            "N is not non-returning: escape through {}",
                            self.fmt_vertex(w)
                        ),
                    );
                }
                if let Some((s, t)) = self.hitting_violation(n, &self.sinks.clone()) {
                    ok = false;
                    note(
                        &mut report,
                        format!(
                            "path {} -> {} avoids N",
                            self.fmt_vertex(s),
                            self.fmt_vertex(t)
                        ),
                    );
                }
                report.k_bottlenecked = ok;
            }
        }
        if let Some(nt) = &witness.nt {
            if nt.len() + 1 > self.k as usize {
                note(
                    &mut report,
                    format!("|NT| = {} exceeds k - 1 = {}", nt.len(), self.k - 1),
                );
            } else {
                let mut ok = true;
                if let Some(w) = self.non_returning_violation(nt) {
                    report.non_returning_ok = false;
                    ok = false;
                    note(
                        &mut report,
                        format!(
                            "NT is not non-returning: escape through {}",
                            self.fmt_vertex(w)
                        ),
                    );
                }
                if let Some((u, w)) = self.sink_branching_violation(nt) {
                    report.sink_branching_ok = false;
                    ok = false;
                    note(
                        &mut report,
                        format!(
                            "NT is not sink-branching: {} branches at {}",
                            self.fmt_vertex(u),
                            self.fmt_vertex(w)
                        ),
                    );
                }
                if let Some((s, t)) = self.hitting_violation(nt, &self.interior_sinks()) {
                    ok = false;
                    note(
                        &mut report,
                        format!(
                            "path {} -> interior sink {} avoids NT",
                            self.fmt_vertex(s),
                            self.fmt_vertex(t)
                        ),
                    );
                }
                report.sink_bottlenecked = ok;
            }
        }
        report.interlacing = report.k_bottlenecked && report.sink_bottlenecked;
        Ok(report)
    }

    /// Brute-force witness search over vertices that lie on some
    /// source-to-sink path. Exponential; intended only for small graphs.
    fn search_witness(&self, search_cap: usize) -> Result<BottleneckWitness> {
        let from = self.reach_from(&self.sources.clone(), None);
        let to = self.reach_to(&self.sinks.clone(), None);
        let candidates: Vec<usize> = (0..self.n_vertices())
            .filter(|&v| from[v] && to[v])
            .collect();
        if candidates.len() > search_cap {
            return Err(Error::arg(format!(
                "witness search over {} candidates exceeds the cap {search_cap}; supply a witness",
                candidates.len()
            )));
        }
        let find = |max_size: usize, sink_side: bool| -> Option<BTreeSet<usize>> {
            let m = candidates.len();
            let mut best: Option<BTreeSet<usize>> = None;
            for mask in 0u64..(1u64 << m) {
                if (mask.count_ones() as usize) > max_size {
                    continue;
                }
                let set: BTreeSet<usize> = (0..m)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| candidates[i])
                    .collect();
                if self.non_returning_violation(&set).is_some() {
                    continue;
                }
                let ok = if sink_side {
                    self.sink_branching_violation(&set).is_none()
                        && self
                            .hitting_violation(&set, &self.interior_sinks())
                            .is_none()
                } else {
                    self.hitting_violation(&set, &self.sinks.clone()).is_none()
                };
                if ok && best.as_ref().map(|b| set.len() < b.len()).unwrap_or(true) {
                    best = Some(set);
                }
            }
            best
        };
        Ok(BottleneckWitness {
            n: find(self.k as usize, false),
            nt: find(self.k as usize - 1, true),
        })
    }

    /// Opposite network: edges reversed, `S^op = (t_{2k-1},...,t_1)`,
    /// `T^op = (s_{2k-1},...,s_1)`. The k-bottleneck witness carries over;
    /// the sink bottleneck does not.
    pub fn opposite(&self) -> Network {
        let mut edges = Vec::with_capacity(self.n_edges());
        for u in 0..self.n_vertices() {
            for &(v, ref w) in &self.out[u] {
                edges.push((v, u, w.clone()));
            }
        }
        let mut sources: Vec<usize> = self.sinks.clone();
        sources.reverse();
        let mut sinks: Vec<usize> = self.sources.clone();
        sinks.reverse();
        let mut net = Network::new(
            self.vertices.clone(),
            edges,
            self.k,
            sources,
            sinks,
            self.convention,
        )
        .expect("reversing a valid network is valid");
        net.embedding_verified = self.embedding_verified;
        net.witness = self.witness.as_ref().map(|w| BottleneckWitness {
            n: w.n.clone(),
            nt: None,
        });
        net
    }
}

/// The rectangular grid network on `m` rows and `n` columns in matrix
/// coordinates, with the zig-zag source staircase at the top-left corner,
/// the sink staircase at the bottom-right corner, and the canonical
/// bottleneck witness (odd sources, even interior sinks).
pub fn grid_network(
    m: u32,
    n: u32,
    k: u32,
    weights: &BTreeMap<((u32, u32), (u32, u32)), Poly>,
) -> Result<Network> {
    grid_network_with(m, n, k, |a, b| {
        weights
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Poly::one)
    })
}

pub fn grid_network_unit(m: u32, n: u32, k: u32) -> Result<Network> {
    grid_network(m, n, k, &BTreeMap::new())
}

/// Unit weights replaced by seeded positive rationals (numerators and
/// denominators at most 100), reproducible from the seed.
pub fn grid_network_seeded(m: u32, n: u32, k: u32, seed: u64) -> Result<Network> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights = BTreeMap::new();
    for r in 1..=m {
        for c in 1..=n {
            if r < m {
                weights.insert(
                    ((r, c), (r + 1, c)),
                    Poly::constant(random_positive_rat(&mut rng)),
                );
            }
            if c < n {
                weights.insert(
                    ((r, c), (r, c + 1)),
                    Poly::constant(random_positive_rat(&mut rng)),
                );
            }
        }
    }
    grid_network(m, n, k, &weights)
}

pub fn grid_network_with(
    m: u32,
    n: u32,
    k: u32,
    weight: impl Fn((u32, u32), (u32, u32)) -> Poly,
) -> Result<Network> {
    if m < 3 || n < 3 {
        return Err(Error::construction("grid needs m, n >= 3"));
    }
    if !(2 <= k && k < m.min(n)) {
        return Err(Error::construction("grid needs 2 <= k < min(m, n)"));
    }
    let id = |r: u32, c: u32| ((r - 1) * n + (c - 1)) as usize;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for r in 1..=m {
        for c in 1..=n {
            vertices.push(Vertex {
                id: id(r, c),
                coord: Some((r as i32, c as i32)),
            });
            if r < m {
                edges.push((id(r, c), id(r + 1, c), weight((r, c), (r + 1, c))));
            }
            if c < n {
                edges.push((id(r, c), id(r, c + 1), weight((r, c), (r, c + 1))));
            }
        }
    }
    // S = ((k,1),(k-1,1),(k-1,2),(k-2,2),...,(1,k-1),(1,k))
    let mut sources = vec![id(k, 1)];
    for i in 1..k {
        sources.push(id(k - i, i));
        sources.push(id(k - i, i + 1));
    }
    // T = ((m,n-k+1),(m-1,n-k+1),(m-1,n-k+2),...,(m-k+1,n-1),(m-k+1,n))
    let mut sinks = vec![id(m, n - k + 1)];
    for i in 1..k {
        sinks.push(id(m - i, n - k + i));
        sinks.push(id(m - i, n - k + i + 1));
    }
    let n_set: BTreeSet<usize> = sources.iter().copied().step_by(2).collect();
    let nt_set: BTreeSet<usize> = sinks.iter().copied().skip(1).step_by(2).collect();
    let mut net = Network::new(vertices, edges, k, sources, sinks, Convention::MatrixRowCol)?;
    net.embedding_verified = true;
    net.witness = Some(BottleneckWitness {
        n: Some(n_set),
        nt: Some(nt_set),
    });
    Ok(net)
}

/// The plain `m x n` grid graph with unit weights and no boundary structure.
pub fn plain_grid(m: u32, n: u32) -> Result<Network> {
    if m < 1 || n < 1 {
        return Err(Error::construction("grid needs m, n >= 1"));
    }
    let id = |r: u32, c: u32| ((r - 1) * n + (c - 1)) as usize;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for r in 1..=m {
        for c in 1..=n {
            vertices.push(Vertex {
                id: id(r, c),
                coord: Some((r as i32, c as i32)),
            });
            if r < m {
                edges.push((id(r, c), id(r + 1, c), Poly::one()));
            }
            if c < n {
                edges.push((id(r, c), id(r, c + 1), Poly::one()));
            }
        }
    }
    Network::new(
        vertices,
        edges,
        0,
        Vec::new(),
        Vec::new(),
        Convention::MatrixRowCol,
    )
}

/// Glued witness network realizing the extreme vanishing pattern of the
/// interlacing cell: a `k x (4k-3)` grid whose middle sinks feed a
/// `(k-1) x (4k-7)` grid, unit weights throughout.
pub fn interspace_witness_network(k: u32) -> Result<Network> {
    if k < 2 {
        return Err(Error::construction("interspace witness needs k >= 2"));
    }
    let k = k as i32;
    let (m1, n1) = (k, 4 * k - 3);
    let (m2, n2) = (k - 1, 4 * k - 7);
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut coord_of: BTreeMap<(i32, i32), usize> = BTreeMap::new();
    let add = |coord: (i32, i32), vertices: &mut Vec<Vertex>, coord_of: &mut BTreeMap<(i32, i32), usize>| {
        let id = vertices.len();
        vertices.push(Vertex {
            id,
            coord: Some(coord),
        });
        coord_of.insert(coord, id);
    };
    for r in 1..=m1 {
        for c in 1..=n1 {
            add((r, c), &mut vertices, &mut coord_of);
        }
    }
    // The second grid sits below the first: its (r, c) has global coordinate
    // (k - 1 + r, 2k - 1 + c), so its top row coincides with the glued sinks
    // t'_{i+1} = (k, 2k - 1 + i).
    // Row 1 of the second grid is glued to the first grid's middle sinks in
    // its leading 2k-3 columns (t'_{i+1} = (k, 2k-1+i)); every other second-
    // grid vertex is fresh and carries a displaced coordinate.
    let g2 = |r: i32, c: i32| -> (i32, i32) {
        if r == 1 && c <= 2 * k - 3 {
            (k, 2 * k - 1 + c)
        } else {
            (k + r, 2 * k - 1 + c)
        }
    };
    for c in (2 * k - 3 + 1)..=n2 {
        add(g2(1, c), &mut vertices, &mut coord_of);
    }
    for r in 2..=m2 {
        for c in 1..=n2 {
            add(g2(r, c), &mut vertices, &mut coord_of);
        }
    }
    let at = |coord: (i32, i32)| -> usize { coord_of[&coord] };
    let mut edges: Vec<(usize, usize, Poly)> = Vec::new();
    let mut edge_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push = |u: usize, v: usize, edges: &mut Vec<(usize, usize, Poly)>, edge_set: &mut BTreeSet<(usize, usize)>| {
        if edge_set.insert((u, v)) {
            edges.push((u, v, Poly::one()));
        }
    };
    for r in 1..=m1 {
        for c in 1..=n1 {
            if r < m1 {
                push(at((r, c)), at((r + 1, c)), &mut edges, &mut edge_set);
            }
            if c < n1 {
                push(at((r, c)), at((r, c + 1)), &mut edges, &mut edge_set);
            }
        }
    }
    for r in 1..=m2 {
        for c in 1..=n2 {
            if r < m2 {
                push(at(g2(r, c)), at(g2(r + 1, c)), &mut edges, &mut edge_set);
            }
            if c < n2 {
                push(at(g2(r, c)), at(g2(r, c + 1)), &mut edges, &mut edge_set);
            }
        }
    }
    // S = top row of the first grid; T = (t'_1, t''_1 .. t''_{2k-3}, t'_{2k-1}).
    let sources: Vec<usize> = (1..=(2 * k - 1)).map(|c| at((1, c))).collect();
    let mut sinks = vec![at((k, 2 * k - 1))];
    for j in 1..=(2 * k - 3) {
        sinks.push(at(g2(m2, 2 * k - 5 + j + 1)));
    }
    sinks.push(at((k, 4 * k - 3)));
    let n_set: BTreeSet<usize> = (1..=k).map(|r| at((r, 2 * k - 1))).collect();
    let nt_set: BTreeSet<usize> = (1..=m2).map(|r| at(g2(r, 2 * k - 3))).collect();
    let kk = k as u32;
    let mut net = Network::new(vertices, edges, kk, sources, sinks, Convention::MatrixRowCol)?;
    net.embedding_verified = true;
    net.witness = Some(BottleneckWitness {
        n: Some(n_set),
        nt: Some(nt_set),
    });
    Ok(net)
}

/// The Cartesian rectangle as a plain graph (no boundary structure):
/// horizontal edges at height `y` point left and carry weight `x_y`,
/// vertical edges point down with weight 1. This is the substrate of the
/// lattice-path model for Schur polynomials.
pub fn cartesian_weighted_rect(width: u32, height: u32) -> Result<Network> {
    if width < 1 || height < 1 {
        return Err(Error::construction("rectangle needs positive dimensions"));
    }
    let (vertices, edges) = cartesian_rect(width, height);
    Network::new(
        vertices,
        edges,
        0,
        Vec::new(),
        Vec::new(),
        Convention::CartesianXY,
    )
}

fn cartesian_rect(width: u32, height: u32) -> (Vec<Vertex>, Vec<(usize, usize, Poly)>) {
    let id = |x: u32, y: u32| ((y - 1) * width + (x - 1)) as usize;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for y in 1..=height {
        for x in 1..=width {
            vertices.push(Vertex {
                id: id(x, y),
                coord: Some((x as i32, y as i32)),
            });
        }
    }
    for y in 1..=height {
        for x in 1..=width {
            if x > 1 {
                // Horizontal step at height y carries the variable weight x_y.
                edges.push((id(x, y), id(x - 1, y), Poly::var(y)));
            }
            if y > 1 {
                edges.push((id(x, y), id(x, y - 1), Poly::one()));
            }
        }
    }
    (vertices, edges)
}

/// Network behind the flagged three-term Schur identity: the rectangle
/// between `(1,1)` and `(lambda_1 + k, n)` in Cartesian coordinates,
/// horizontal edges at height `j` weighted `x_j`, doubled sources along the
/// top (the copy at position `k - t` omitted) and the sink staircase near
/// the bottom-left corner.
pub fn schur_identity_network(lambda: &[u32], t: u32, n: u32) -> Result<Network> {
    let k = lambda.len() as u32;
    if k == 0 {
        return Err(Error::construction("lambda must be nonempty"));
    }
    if !lambda.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::construction("lambda must be weakly decreasing"));
    }
    if t + 1 > k {
        return Err(Error::construction("need 0 <= t <= k - 1"));
    }
    if n < k {
        return Err(Error::construction("need n >= k"));
    }
    let width = lambda[0] + k;
    let (vertices, edges) = cartesian_rect(width, n);
    let id = |x: u32, y: u32| ((y - 1) * width + (x - 1)) as usize;
    let v = |i: u32| id(lambda[(k - i) as usize] + i, n);
    let mut sources = Vec::new();
    for i in 1..=k {
        sources.push(v(i));
        if i != k - t {
            sources.push(v(i));
        }
    }
    // T = ((1,k),(2,k),(2,k-1),(3,k-1),...,(k,2),(k,1))
    let mut sinks = vec![id(1, k)];
    for i in 1..k {
        sinks.push(id(i + 1, k - i + 1));
        sinks.push(id(i + 1, k - i));
    }
    let n_set: BTreeSet<usize> = sources.iter().copied().step_by(2).collect();
    let nt_set: BTreeSet<usize> = sinks.iter().copied().skip(1).step_by(2).collect();
    let mut net = Network::new(vertices, edges, k, sources, sinks, Convention::CartesianXY)?;
    net.embedding_verified = true;
    net.witness = Some(BottleneckWitness {
        n: Some(n_set),
        nt: Some(nt_set),
    });
    Ok(net)
}

/// Network behind the interlacing-pair identity: same rectangle and weights,
/// sources alternating between the two interlacing partitions, doubled sinks
/// along the bottom-left.
pub fn interlace_pair_network(lambda: &[u32], mu: &[u32], n: u32) -> Result<Network> {
    let k = lambda.len() as u32;
    if k == 0 || mu.len() + 1 != lambda.len() {
        return Err(Error::construction("need |mu| = |lambda| - 1"));
    }
    for i in 0..mu.len() {
        if !(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1]) {
            return Err(Error::construction("lambda and mu must interlace"));
        }
    }
    if n < k {
        return Err(Error::construction("need n >= k"));
    }
    let width = lambda[0] + k;
    let (vertices, edges) = cartesian_rect(width, n);
    let id = |x: u32, y: u32| ((y - 1) * width + (x - 1)) as usize;
    let v = |i: u32| id(lambda[(k - i) as usize] + i, n);
    let u = |i: u32| id(mu[(k - 1 - i) as usize] + i, n);
    let mut sources = Vec::new();
    for i in 1..k {
        sources.push(v(i));
        sources.push(u(i));
    }
    sources.push(v(k));
    // T = ((1,1),(1,1),(2,1),(2,1),...,(k-1,1),(k-1,1),(k,1))
    let mut sinks = Vec::new();
    for i in 1..k {
        sinks.push(id(i, 1));
        sinks.push(id(i, 1));
    }
    sinks.push(id(k, 1));
    let n_set: BTreeSet<usize> = sinks.iter().copied().step_by(2).collect();
    let mut net = Network::new(vertices, edges, k, sources, sinks, Convention::CartesianXY)?;
    net.embedding_verified = true;
    net.witness = Some(BottleneckWitness {
        n: Some(n_set),
        nt: None,
    });
    Ok(net)
}

/// Render the line-oriented text interchange format (header `ILNET 1`).
pub fn render_ilnet(net: &Network) -> String {
    let mut out = String::from("ILNET 1\n");
    out.push_str(&format!("k {}\n", net.k));
    for v in &net.vertices {
        match v.coord {
            Some((a, b)) => out.push_str(&format!("v {} {} {}\n", v.id, a, b)),
            None => out.push_str(&format!("v {}\n", v.id)),
        }
    }
    for u in 0..net.n_vertices() {
        for &(v, ref w) in &net.out[u] {
            out.push_str(&format!("e {} {} {}\n", u, v, w.render(true)));
        }
    }
    let join = |ids: &[usize]| {
        ids.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&format!("S {}\n", join(&net.sources)));
    out.push_str(&format!("T {}\n", join(&net.sinks)));
    if let Some(w) = &net.witness {
        if let Some(n) = &w.n {
            out.push_str(&format!("N {}\n", join(&n.iter().copied().collect::<Vec<_>>())));
        }
        if let Some(nt) = &w.nt {
            out.push_str(&format!("NT {}\n", join(&nt.iter().copied().collect::<Vec<_>>())));
        }
    }
    out
}

/// Parse the `ILNET 1` format. The declared boundary order is accepted as-is
/// and the result is flagged as having an unverified embedding.
pub fn parse_ilnet(text: &str) -> Result<Network> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::parse("empty input"))?;
    if header.trim() != "ILNET 1" {
        return Err(Error::parse("expected header `ILNET 1`"));
    }
    let mut k: Option<u32> = None;
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut edges = Vec::new();
    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    let mut n_set: Option<BTreeSet<usize>> = None;
    let mut nt_set: Option<BTreeSet<usize>> = None;
    let parse_ids = |rest: &[&str]| -> Result<Vec<usize>> {
        rest.iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse("bad vertex id"))
            })
            .collect()
    };
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "k" => {
                k = Some(
                    toks.get(1)
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::parse("bad k record"))?,
                )
            }
            "v" => {
                let id: usize = toks
                    .get(1)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse("bad vertex record"))?;
                let coord = if toks.len() >= 4 {
                    Some((
                        toks[2]
                            .parse()
                            .map_err(|_| Error::parse("bad coordinate"))?,
                        toks[3]
                            .parse()
                            .map_err(|_| Error::parse("bad coordinate"))?,
                    ))
                } else {
                    None
                };
                if id != vertices.len() {
                    return Err(Error::parse("vertex ids must appear in order 0..n"));
                }
                vertices.push(Vertex { id, coord });
            }
            "e" => {
                if toks.len() < 4 {
                    return Err(Error::parse("bad edge record"));
                }
                let u: usize = toks[1].parse().map_err(|_| Error::parse("bad edge src"))?;
                let v: usize = toks[2].parse().map_err(|_| Error::parse("bad edge dst"))?;
                let w = parse_poly(&toks[3..].join(""))?;
                edges.push((u, v, w));
            }
            "S" => sources = parse_ids(&toks[1..])?,
            "T" => sinks = parse_ids(&toks[1..])?,
            "N" => n_set = Some(parse_ids(&toks[1..])?.into_iter().collect()),
            "NT" => nt_set = Some(parse_ids(&toks[1..])?.into_iter().collect()),
            other => return Err(Error::parse(format!("unknown record `{other}`"))),
        }
    }
    let k = k.ok_or_else(|| Error::parse("missing k record"))?;
    let mut net = Network::new(vertices, edges, k, sources, sinks, Convention::Abstract)?;
    if n_set.is_some() || nt_set.is_some() {
        net.witness = Some(BottleneckWitness {
            n: n_set,
            nt: nt_set,
        });
    }
    Ok(net)
}
