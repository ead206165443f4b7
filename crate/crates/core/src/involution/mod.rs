//! The sink-swapping involution on pairs of noncrossing path tuples, its
//! source-swapping mirror, swap classification, and the three-term and
//! parity weight-relation verifiers.
//!
//! The algorithm starts at the minimum maximum antichain of the
//! intersection poset and chases alternating red/blue crossings downward;
//! the output is the flip of the input at the final flip set. Every
//! "unique maximal/minimal" selection is asserted at runtime: a tie
//! indicates a violated precondition and raises an integrity error with the
//! partial trace attached.

pub mod demo;
mod poset;

pub use poset::IntersectionPoset;

use std::collections::BTreeSet;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::network::Network;
use crate::paths::{
    pattern_weight, validate_pair, Path, PathTuple, Pattern, PncPair, WeightMode,
};

/// One loop iteration of the sink-swapping algorithm.
#[derive(Clone, Debug)]
pub struct TauStep {
    /// 1-based red index `m_c`.
    pub m: u32,
    /// Vertex `w_c`.
    pub w: usize,
    /// Vertex `v_c`.
    pub v: usize,
    /// `FLIP_c` in insertion order, as vertex ids.
    pub flip: Vec<usize>,
    /// 1-based blue index `n_c`.
    pub n: u32,
    /// The next `w_{c+1}`, absent on the final iteration.
    pub next_w: Option<usize>,
}

/// Full step log of one run of the sink-swapping algorithm.
#[derive(Clone, Debug)]
pub struct TauTrace {
    /// Minimum maximum antichain, ordered by red label.
    pub u: Vec<usize>,
    /// 1-based index of the blue path missing from the labels of `u`.
    pub n0: u32,
    /// Initial chase vertex, if the loop is entered.
    pub w1: Option<usize>,
    pub steps: Vec<TauStep>,
    /// The final flip set, as vertex ids in insertion order.
    pub final_flip: Vec<usize>,
    /// 1-based blue index at exit (`n_c`; `n_0` when the loop was skipped).
    pub final_n: u32,
    /// Candidate output sink patterns (several only when repeated boundary
    /// vertices make the assignment ambiguous).
    pub output_j: Vec<BTreeSet<u32>>,
}

/// Exchange the tails of the two paths through `v`.
pub fn flip(tuple: &PathTuple, v: usize) -> Result<PathTuple> {
    let holders: Vec<usize> = tuple
        .iter()
        .enumerate()
        .filter(|(_, p)| p.contains(&v))
        .map(|(i, _)| i)
        .collect();
    let [i, j] = holders[..] else {
        return Err(Error::arg(format!(
            "flip vertex must be a 2-crossing, found {} holders",
            holders.len()
        )));
    };
    let pos_i = tuple[i].iter().position(|&x| x == v).unwrap();
    let pos_j = tuple[j].iter().position(|&x| x == v).unwrap();
    let mut out = tuple.clone();
    let mut new_i = tuple[i][..=pos_i].to_vec();
    new_i.extend_from_slice(&tuple[j][pos_j + 1..]);
    let mut new_j = tuple[j][..=pos_j].to_vec();
    new_j.extend_from_slice(&tuple[i][pos_i + 1..]);
    out[i] = new_i;
    out[j] = new_j;
    Ok(out)
}

/// Flip at every vertex of `set`; the order does not matter.
pub fn flip_set(tuple: &PathTuple, set: &[usize]) -> Result<PathTuple> {
    let mut out = tuple.clone();
    for &v in set {
        out = flip(&out, v)?;
    }
    Ok(out)
}

/// Swap kinds, ordered by refinement.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SwapKind {
    NotSwap,
    Swap,
    BalancedSwap,
    EndSwap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapClassification {
    pub kind: SwapKind,
    pub pivot: Option<u32>,
}

/// Classify `j2` relative to `j`: disjointness makes it a swap with a unique
/// pivot; balanced when the pivot splits the two sets evenly; an end swap
/// when the pivot is 1 or 2k-1.
pub fn classify_swap(j: &BTreeSet<u32>, j2: &BTreeSet<u32>, k: u32) -> Result<SwapClassification> {
    let want = (k - 1) as usize;
    if j.len() != want || j2.len() != want {
        return Err(Error::arg("swap sides must have k-1 members"));
    }
    let len = 2 * k - 1;
    if j.iter().chain(j2).any(|&x| x < 1 || x > len) {
        return Err(Error::arg("swap members must lie in [1, 2k-1]"));
    }
    if j.intersection(j2).next().is_some() {
        return Ok(SwapClassification {
            kind: SwapKind::NotSwap,
            pivot: None,
        });
    }
    let pivot = (1..=len)
        .find(|x| !j.contains(x) && !j2.contains(x))
        .expect("disjoint (k-1)-sets leave one pivot");
    let balanced = j.iter().filter(|&&x| x <= pivot).count()
        == j2.iter().filter(|&&x| x <= pivot).count();
    let kind = if pivot == 1 || pivot == len {
        SwapKind::EndSwap
    } else if balanced {
        SwapKind::BalancedSwap
    } else {
        SwapKind::Swap
    };
    Ok(SwapClassification {
        kind,
        pivot: Some(pivot),
    })
}

/// Candidate sink patterns of a flipped pair: assignments of sink-tuple
/// positions to the red and blue endpoints, increasing within each tuple.
fn sink_pattern_candidates(net: &Network, red: &[Path], blue: &[Path]) -> Vec<BTreeSet<u32>> {
    let len = net.boundary_len();
    let ends =
        |tuple: &[Path]| -> Vec<usize> { tuple.iter().map(|p| *p.last().unwrap()).collect() };
    let red_ends = ends(red);
    let blue_ends = ends(blue);
    let mut used = vec![false; len + 1];
    let mut red_idx: Vec<u32> = Vec::new();
    let mut blue_idx: Vec<u32> = Vec::new();
    let mut out: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    fn rec(
        net: &Network,
        red_ends: &[usize],
        blue_ends: &[usize],
        used: &mut Vec<bool>,
        red_idx: &mut Vec<u32>,
        blue_idx: &mut Vec<u32>,
        out: &mut BTreeSet<BTreeSet<u32>>,
    ) {
        if red_idx.len() < red_ends.len() {
            let pos = red_idx.len();
            let lo = red_idx.last().map(|&x| x + 1).unwrap_or(1);
            for idx in lo..=(net.boundary_len() as u32) {
                if !used[idx as usize] && net.sink(idx) == red_ends[pos] {
                    used[idx as usize] = true;
                    red_idx.push(idx);
                    rec(net, red_ends, blue_ends, used, red_idx, blue_idx, out);
                    red_idx.pop();
                    used[idx as usize] = false;
                }
            }
            return;
        }
        if blue_idx.len() < blue_ends.len() {
            let pos = blue_idx.len();
            let lo = blue_idx.last().map(|&x| x + 1).unwrap_or(1);
            for idx in lo..=(net.boundary_len() as u32) {
                if !used[idx as usize] && net.sink(idx) == blue_ends[pos] {
                    used[idx as usize] = true;
                    blue_idx.push(idx);
                    rec(net, red_ends, blue_ends, used, red_idx, blue_idx, out);
                    blue_idx.pop();
                    used[idx as usize] = false;
                }
            }
            return;
        }
        out.insert(red_idx.iter().copied().collect());
    }
    rec(
        net,
        &red_ends,
        &blue_ends,
        &mut used,
        &mut red_idx,
        &mut blue_idx,
        &mut out,
    );
    out.into_iter().collect()
}

fn integrity(trace: &TauTrace, msg: &str) -> Error {
    Error::Integrity(format!(
        "{msg}; trace so far: u={:?} n0={} steps={}",
        trace.u,
        trace.n0,
        trace.steps.len()
    ))
}

/// The sink-swapping involution. Requires a valid pair of `pattern`; when
/// the network carries a k-bottleneck witness smaller than k the domain is
/// empty and the call is rejected as vacuous.
pub fn tau(net: &Network, pattern: &Pattern, pair: &PncPair) -> Result<(PncPair, TauTrace)> {
    validate_pair(net, pattern, pair)?;
    let k = net.k() as usize;
    if let Some(w) = &net.witness {
        if let Some(n) = &w.n {
            if n.len() < k {
                return Err(Error::VacuousDomain(format!(
                    "bottleneck has {} < k = {k} vertices, so no pairs exist",
                    n.len()
                )));
            }
        }
    }
    let mut tuple: PathTuple = pair.red.clone();
    tuple.extend(pair.blue.iter().cloned());
    let reds = pair.red.len(); // k - 1
    let poset = IntersectionPoset::build(&tuple)?;

    // Every intersection of a valid pair joins exactly one red and one blue.
    let mut red_of = vec![0usize; poset.len()];
    let mut blue_of = vec![0usize; poset.len()];
    for e in 0..poset.len() {
        let labels = &poset.labels[e];
        let rs: Vec<usize> = labels.iter().copied().filter(|&p| p < reds).collect();
        let bs: Vec<usize> = labels.iter().copied().filter(|&p| p >= reds).collect();
        if rs.len() != 1 || bs.len() != 1 {
            return Err(Error::integrity(format!(
                "crossing at {} has labels {:?}, expected one red and one blue",
                net.fmt_vertex(poset.vertex[e]),
                labels
            )));
        }
        red_of[e] = rs[0];
        blue_of[e] = bs[0] - reds;
    }

    if poset.width() != reds {
        return Err(Error::integrity(format!(
            "maximum antichain has size {} but k - 1 = {reds}; network not k-bottlenecked for this pair",
            poset.width()
        )));
    }

    let mut u = poset.min_max_antichain()?;
    u.sort_by_key(|&e| red_of[e]);

    let mut trace = TauTrace {
        u: u.iter().map(|&e| poset.vertex[e]).collect(),
        n0: 0,
        w1: None,
        steps: Vec::new(),
        final_flip: Vec::new(),
        final_n: 0,
        output_j: Vec::new(),
    };

    // FLIP_0 := U, kept in insertion order for the trace.
    let mut flip_elems: Vec<usize> = u.clone();
    let blues_hit: BTreeSet<usize> = u.iter().map(|&e| blue_of[e]).collect();
    let missing: Vec<usize> = (0..pair.blue.len()).filter(|b| !blues_hit.contains(b)).collect();
    let [n0] = missing[..] else {
        return Err(integrity(&trace, "antichain labels miss more than one blue"));
    };
    trace.n0 = n0 as u32 + 1;

    let unique_max = |cands: &[usize]| -> Result<usize> {
        let maxes: Vec<usize> = cands
            .iter()
            .copied()
            .filter(|&e| !cands.iter().any(|&f| poset.lt(e, f)))
            .collect();
        match maxes[..] {
            [m] => Ok(m),
            _ => Err(Error::integrity(format!(
                "non-unique maximal element among {} candidates",
                cands.len()
            ))),
        }
    };
    let unique_min = |cands: &[usize]| -> Result<usize> {
        let mins: Vec<usize> = cands
            .iter()
            .copied()
            .filter(|&e| !cands.iter().any(|&f| poset.lt(f, e)))
            .collect();
        match mins[..] {
            [m] => Ok(m),
            _ => Err(Error::integrity(format!(
                "non-unique minimal element among {} candidates",
                cands.len()
            ))),
        }
    };

    let down = poset.downset(&u);
    let first_candidates: Vec<usize> = (0..poset.len())
        .filter(|&e| down[e] && blue_of[e] == n0)
        .collect();

    let mut final_n = n0;
    if !first_candidates.is_empty() {
        let mut w = unique_max(&first_candidates)
            .map_err(|e| integrity(&trace, &format!("initial chase: {e}")))?;
        trace.w1 = Some(poset.vertex[w]);
        let mut n_cur;
        loop {
            if trace.steps.len() > poset.len() {
                return Err(integrity(&trace, "loop failed to terminate"));
            }
            let m = red_of[w];
            let v_cands: Vec<usize> = (0..poset.len())
                .filter(|&e| red_of[e] == m && poset.lt(w, e))
                .collect();
            if v_cands.is_empty() {
                return Err(integrity(&trace, "no candidate above the chase vertex"));
            }
            let v = unique_min(&v_cands).map_err(|e| integrity(&trace, &format!("{e}")))?;
            // FLIP_c := FLIP_{c-1} symmetric-difference {w_c, v_c}.
            for x in [w, v] {
                if let Some(pos) = flip_elems.iter().position(|&e| e == x) {
                    flip_elems.remove(pos);
                } else {
                    flip_elems.push(x);
                }
            }
            n_cur = blue_of[v];
            let w_cands: Vec<usize> = (0..poset.len())
                .filter(|&e| blue_of[e] == n_cur && poset.lt(e, v))
                .collect();
            let next_w = if w_cands.is_empty() {
                None
            } else {
                Some(unique_max(&w_cands).map_err(|e| integrity(&trace, &format!("{e}")))?)
            };
            trace.steps.push(TauStep {
                m: m as u32 + 1,
                w: poset.vertex[w],
                v: poset.vertex[v],
                flip: flip_elems.iter().map(|&e| poset.vertex[e]).collect(),
                n: n_cur as u32 + 1,
                next_w: next_w.map(|e| poset.vertex[e]),
            });
            match next_w {
                Some(nw) => w = nw,
                None => break,
            }
        }
        final_n = n_cur;
    }
    trace.final_n = final_n as u32 + 1;
    trace.final_flip = flip_elems.iter().map(|&e| poset.vertex[e]).collect();

    let flipped = flip_set(&tuple, &trace.final_flip)?;
    let out_red: PathTuple = flipped[..reds].to_vec();
    let out_blue: PathTuple = flipped[reds..].to_vec();
    for (name, t) in [("red", &out_red), ("blue", &out_blue)] {
        let mut seen = BTreeSet::new();
        for p in t.iter() {
            for &v in p {
                if !seen.insert(v) {
                    return Err(integrity(
                        &trace,
                        &format!("output {name} tuple is crossing at {}", net.fmt_vertex(v)),
                    ));
                }
            }
        }
    }
    trace.output_j = sink_pattern_candidates(net, &out_red, &out_blue);
    if trace.output_j.is_empty() {
        return Err(integrity(&trace, "output endpoints match no sink pattern"));
    }
    Ok((
        PncPair {
            red: out_red,
            blue: out_blue,
        },
        trace,
    ))
}

/// Stable text rendering of a full trace, for the CLI and golden tests.
pub fn render_trace(net: &Network, pattern: &Pattern, trace: &TauTrace) -> String {
    let vs = |ids: &[usize]| -> String {
        let body: Vec<String> = ids.iter().map(|&v| net.fmt_vertex(v)).collect();
        format!("{{{}}}", body.join(","))
    };
    let set = |s: &BTreeSet<u32>| -> String {
        let body: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", body.join(","))
    };
    let mut out = String::new();
    out.push_str(&format!(
        "pattern: I={} J={}\n",
        set(&pattern.i),
        set(&pattern.j)
    ));
    out.push_str(&format!("U = {}\n", vs(&trace.u)));
    out.push_str(&format!("FLIP_0 = {}\n", vs(&trace.u)));
    out.push_str(&format!("n_0 = {}\n", trace.n0));
    match trace.w1 {
        Some(w) => out.push_str(&format!("w_1 = {}\n", net.fmt_vertex(w))),
        None => out.push_str("no chase vertex below U; output is the flip at U\n"),
    }
    for (idx, s) in trace.steps.iter().enumerate() {
        let c = idx + 1;
        out.push_str(&format!(
            "step {c}: w={} m={} v={} FLIP_{c} = {} n={}",
            net.fmt_vertex(s.w),
            s.m,
            net.fmt_vertex(s.v),
            vs(&s.flip),
            s.n
        ));
        match s.next_w {
            Some(w) => out.push_str(&format!(" w_{} = {}\n", c + 1, net.fmt_vertex(w))),
            None => out.push_str(" exit\n"),
        }
    }
    out.push_str(&format!("FLIP_final = {}\n", vs(&trace.final_flip)));
    let js: Vec<String> = trace.output_j.iter().map(&set).collect();
    out.push_str(&format!("output pattern: I={} J'={}\n", set(&pattern.i), js.join(" or ")));
    out
}

/// Reverse every path and the tuple orders, mapping a pair of type `(I, J)`
/// on `net` to one of type `(J°, I°)` on the opposite network, where
/// `X° = {2k - x}`.
pub fn reverse_pair(pair: &PncPair) -> PncPair {
    let rev = |tuple: &PathTuple| -> PathTuple {
        let mut out: PathTuple = tuple
            .iter()
            .map(|p| p.iter().rev().copied().collect())
            .collect();
        out.reverse();
        out
    };
    PncPair {
        red: rev(&pair.red),
        blue: rev(&pair.blue),
    }
}

pub fn circ(set: &BTreeSet<u32>, k: u32) -> BTreeSet<u32> {
    set.iter().map(|&x| 2 * k - x).collect()
}

/// The source-swapping involution: conjugate the sink swap by path
/// reversal into the opposite network. Returns the output pair together
/// with the candidate output source patterns.
pub fn sigma(
    net: &Network,
    pattern: &Pattern,
    pair: &PncPair,
) -> Result<(PncPair, Vec<BTreeSet<u32>>)> {
    let k = net.k();
    let op = net.opposite();
    let op_pattern = Pattern {
        i: circ(&pattern.j, k),
        j: circ(&pattern.i, k),
    };
    let op_pair = reverse_pair(pair);
    let (op_out, trace) = tau(&op, &op_pattern, &op_pair)?;
    let out = reverse_pair(&op_out);
    let candidates: Vec<BTreeSet<u32>> = trace.output_j.iter().map(|j| circ(j, k)).collect();
    Ok((out, candidates))
}

fn subsets_of_size(pool: &[u32], r: usize) -> Vec<BTreeSet<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(pool: &[u32], r: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<BTreeSet<u32>>) {
        if cur.len() == r {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, r, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(pool, r, 0, &mut cur, &mut out);
    out
}

/// All sink patterns (as sorted sets) for parameter `k`.
pub fn all_patterns(k: u32) -> Vec<BTreeSet<u32>> {
    let pool: Vec<u32> = (1..=2 * k - 1).collect();
    subsets_of_size(&pool, (k - 1) as usize)
}

/// Parity relation: with a fixed source pattern and a fixed even part `K`,
/// the total weight over sink patterns with even part `K` equals the total
/// over those with the complementary even part.
pub fn verify_parity_relation(
    net: &Network,
    i_set: &BTreeSet<u32>,
    k_even: &BTreeSet<u32>,
) -> Result<bool> {
    let k = net.k();
    let len = 2 * k - 1;
    let evens: BTreeSet<u32> = (1..=len).filter(|x| x % 2 == 0).collect();
    if !k_even.is_subset(&evens) {
        return Err(Error::arg("K must consist of even indices"));
    }
    let odds: Vec<u32> = (1..=len).filter(|x| x % 2 == 1).collect();
    let side = |fixed: &BTreeSet<u32>| -> Result<Poly> {
        let mut total = Poly::zero();
        let want = (k - 1) as usize;
        if fixed.len() > want {
            return Ok(total);
        }
        for extra in subsets_of_size(&odds, want - fixed.len()) {
            let j: BTreeSet<u32> = fixed.union(&extra).copied().collect();
            let w = pattern_weight(
                net,
                &Pattern {
                    i: i_set.clone(),
                    j,
                },
                &WeightMode::Edge,
            )?;
            total += &w;
        }
        Ok(total)
    };
    let k_comp: BTreeSet<u32> = evens.difference(k_even).copied().collect();
    Ok(side(k_even)? == side(&k_comp)?)
}

/// Three-term relation on an interlacing network: for a sink pattern
/// avoiding both ends, `wt(I,J) = wt(I,J') + wt(I,J'')` with
/// `J' = [2,2k-1] \ J` and `J'' = [1,2k-2] \ J`.
pub fn verify_three_term(net: &Network, i_set: &BTreeSet<u32>, j_set: &BTreeSet<u32>) -> Result<bool> {
    let k = net.k();
    let len = 2 * k - 1;
    if j_set.contains(&1) || j_set.contains(&len) {
        return Err(Error::arg("sink pattern must avoid 1 and 2k-1"));
    }
    let j1: BTreeSet<u32> = (2..=len).filter(|x| !j_set.contains(x)).collect();
    let j2: BTreeSet<u32> = (1..=len - 1).filter(|x| !j_set.contains(x)).collect();
    let w = |j: &BTreeSet<u32>| -> Result<Poly> {
        pattern_weight(
            net,
            &Pattern {
                i: i_set.clone(),
                j: j.clone(),
            },
            &WeightMode::Edge,
        )
    };
    Ok(w(j_set)? == &w(&j1)? + &w(&j2)?)
}

/// The set identity refining the three-term relation: the involution maps
/// `PNCPath(I,J)` bijectively onto the disjoint union of `PNCPath(I,J')`
/// and `PNCPath(I,J'')`.
pub fn verify_bijection_refinement(
    net: &Network,
    i_set: &BTreeSet<u32>,
    j_set: &BTreeSet<u32>,
) -> Result<bool> {
    use crate::paths::enumerate_pnc;
    let k = net.k();
    let len = 2 * k - 1;
    if j_set.contains(&1) || j_set.contains(&len) {
        return Err(Error::arg("sink pattern must avoid 1 and 2k-1"));
    }
    let j1: BTreeSet<u32> = (2..=len).filter(|x| !j_set.contains(x)).collect();
    let j2: BTreeSet<u32> = (1..=len - 1).filter(|x| !j_set.contains(x)).collect();
    let src = enumerate_pnc(
        net,
        &Pattern {
            i: i_set.clone(),
            j: j_set.clone(),
        },
    )?;
    let mut images = Vec::new();
    for pair in &src {
        let (out, trace) = tau(
            net,
            &Pattern {
                i: i_set.clone(),
                j: j_set.clone(),
            },
            pair,
        )?;
        if !trace.output_j.iter().any(|oj| *oj == j1 || *oj == j2) {
            return Ok(false);
        }
        images.push(out);
    }
    // Injectivity and surjectivity by counting: tau is injective (it is an
    // involution), so it is enough that the image count matches the size of
    // the union.
    images.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
    images.dedup();
    let n1 = enumerate_pnc(
        net,
        &Pattern {
            i: i_set.clone(),
            j: j1,
        },
    )?
    .len();
    let n2 = enumerate_pnc(
        net,
        &Pattern {
            i: i_set.clone(),
            j: j2,
        },
    )?
    .len();
    Ok(images.len() == src.len() && src.len() == n1 + n2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{grid_network_seeded, grid_network_unit};
    use crate::paths::{enumerate_pnc, pair_weight};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn flip_is_self_inverse_and_rejects_non_crossings() {
        // Two paths crossing at vertex 5.
        let tuple: PathTuple = vec![vec![0, 5, 1], vec![2, 5, 3]];
        let once = flip(&tuple, 5).unwrap();
        assert_eq!(once, vec![vec![0, 5, 3], vec![2, 5, 1]]);
        assert_eq!(flip(&once, 5).unwrap(), tuple);
        assert!(flip(&tuple, 0).is_err());
        assert!(flip_set(&tuple, &[]).unwrap() == tuple);
    }

    #[test]
    fn flip_set_is_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = grid_network_unit(5, 5, 2).unwrap();
        for pattern in all_patterns(2) {
            let pat = Pattern {
                i: pattern.clone(),
                j: pattern.clone(),
            };
            for pair in enumerate_pnc(&g, &pat).unwrap() {
                let mut tuple = pair.red.clone();
                tuple.extend(pair.blue.iter().cloned());
                let poset = IntersectionPoset::build(&tuple).unwrap();
                let two: Vec<usize> = poset
                    .vertex
                    .iter()
                    .copied()
                    .filter(|v| {
                        poset.labels[poset.index_of[v]].len() == 2
                    })
                    .collect();
                if two.len() < 2 || rng.gen_range(0..5) > 0 {
                    continue;
                }
                let a = two[rng.gen_range(0..two.len())];
                let b = two[rng.gen_range(0..two.len())];
                if a == b {
                    continue;
                }
                assert_eq!(
                    flip_set(&tuple, &[a, b]).unwrap(),
                    flip_set(&tuple, &[b, a]).unwrap()
                );
            }
        }
    }

    #[test]
    fn classify_swap_examples() {
        let c = classify_swap(
            &[2, 4, 6].into_iter().collect(),
            &[3, 5, 7].into_iter().collect(),
            4,
        )
        .unwrap();
        assert_eq!(c.kind, SwapKind::EndSwap);
        assert_eq!(c.pivot, Some(1));
        let c = classify_swap(
            &[2, 4, 6].into_iter().collect(),
            &[1, 3, 5].into_iter().collect(),
            4,
        )
        .unwrap();
        assert_eq!(c.kind, SwapKind::EndSwap);
        assert_eq!(c.pivot, Some(7));
        let c = classify_swap(
            &[1, 2].into_iter().collect(),
            &[1, 3].into_iter().collect(),
            3,
        )
        .unwrap();
        assert_eq!(c.kind, SwapKind::NotSwap);
        assert!(classify_swap(
            &[1].into_iter().collect(),
            &[1, 3].into_iter().collect(),
            3
        )
        .is_err());
    }

    #[test]
    fn worked_example_trace_and_involution() {
        let (net, pattern, pair) = demo::worked_example().unwrap();
        let (out, trace) = tau(&net, &pattern, &pair).unwrap();
        let v = |r: i32, c: i32| net.vertex_by_coord((r, c)).unwrap();
        assert_eq!(trace.u, vec![v(7, 3), v(2, 3), v(1, 4)]);
        assert_eq!(trace.n0, 2);
        assert_eq!(trace.w1, Some(v(5, 5)));
        assert_eq!(trace.steps.len(), 3);
        let s = &trace.steps[0];
        assert_eq!((s.m, s.v, s.n), (2, v(3, 4), 3));
        assert_eq!(
            s.flip,
            vec![v(7, 3), v(2, 3), v(1, 4), v(5, 5), v(3, 4)]
        );
        let s = &trace.steps[1];
        assert_eq!((s.m, s.w, s.v, s.n), (2, v(5, 6), v(5, 5), 2));
        assert_eq!(
            s.flip,
            vec![v(7, 3), v(2, 3), v(1, 4), v(3, 4), v(5, 6)]
        );
        let s = &trace.steps[2];
        assert_eq!((s.m, s.w, s.v, s.n), (1, v(7, 5), v(7, 3), 1));
        assert_eq!(
            s.flip,
            vec![v(2, 3), v(1, 4), v(3, 4), v(5, 6), v(7, 5)]
        );
        assert_eq!(s.next_w, None);
        assert_eq!(
            trace.output_j,
            vec![[3u32, 5, 7].into_iter().collect::<BTreeSet<u32>>()]
        );
        // Weight preservation and the involution property.
        assert_eq!(pair_weight(&net, &pair), pair_weight(&net, &out));
        let out_pattern = Pattern {
            i: pattern.i.clone(),
            j: trace.output_j[0].clone(),
        };
        let (back, _) = tau(&net, &out_pattern, &out).unwrap();
        assert_eq!(back, pair);
    }

    #[test]
    fn exhaustive_involution_on_a_small_grid() {
        let nets = [
            grid_network_unit(4, 4, 2).unwrap(),
            grid_network_seeded(4, 4, 2, 9).unwrap(),
        ];
        for net in &nets {
            for i_set in all_patterns(2) {
                for j_set in all_patterns(2) {
                    let pattern = Pattern {
                        i: i_set.clone(),
                        j: j_set.clone(),
                    };
                    for pair in enumerate_pnc(net, &pattern).unwrap() {
                        let (out, trace) = tau(net, &pattern, &pair).unwrap();
                        assert_eq!(pair_weight(net, &pair), pair_weight(net, &out));
                        let out_j = trace.output_j[0].clone();
                        let class = classify_swap(&j_set, &out_j, 2).unwrap();
                        assert!(
                            class.kind >= SwapKind::BalancedSwap || j_set == out_j,
                            "image must be a balanced swap: {j_set:?} -> {out_j:?}"
                        );
                        // Interlacing grid: end swap.
                        assert!(
                            class.kind == SwapKind::EndSwap,
                            "interlacing grid must yield end swaps"
                        );
                        let out_pattern = Pattern {
                            i: i_set.clone(),
                            j: out_j,
                        };
                        let (back, _) = tau(net, &out_pattern, &out).unwrap();
                        assert_eq!(back, pair);
                    }
                }
            }
        }
    }

    #[test]
    fn flip_count_parities() {
        // For the final flip set: each red is flipped an odd number of
        // times; the final blue an even number of times.
        let (net, pattern, pair) = demo::worked_example().unwrap();
        let (_, trace) = tau(&net, &pattern, &pair).unwrap();
        let mut tuple = pair.red.clone();
        tuple.extend(pair.blue.iter().cloned());
        let poset = IntersectionPoset::build(&tuple).unwrap();
        let reds = pair.red.len();
        for r in 0..reds {
            let count = trace
                .final_flip
                .iter()
                .filter(|&&v| poset.labels[poset.index_of[&v]].contains(&r))
                .count();
            assert_eq!(count % 2, 1, "red {r} must flip an odd number of times");
        }
        let bn = reds + (trace.final_n as usize - 1);
        let count = trace
            .final_flip
            .iter()
            .filter(|&&v| poset.labels[poset.index_of[&v]].contains(&bn))
            .count();
        assert_eq!(count % 2, 0, "final blue must flip an even number of times");
    }

    #[test]
    fn sigma_is_a_weight_preserving_involution() {
        let net = grid_network_seeded(4, 4, 2, 21).unwrap();
        for i_set in all_patterns(2) {
            for j_set in all_patterns(2) {
                let pattern = Pattern {
                    i: i_set.clone(),
                    j: j_set.clone(),
                };
                for pair in enumerate_pnc(&net, &pattern).unwrap() {
                    let (out, candidates) = sigma(&net, &pattern, &pair).unwrap();
                    assert_eq!(pair_weight(&net, &pair), pair_weight(&net, &out));
                    let out_pattern = Pattern {
                        i: candidates[0].clone(),
                        j: j_set.clone(),
                    };
                    let (back, _) = sigma(&net, &out_pattern, &out).unwrap();
                    assert_eq!(back, pair);
                }
            }
        }
    }

    #[test]
    fn three_term_relation_on_small_grids() {
        for seed in [1u64, 2] {
            let net = grid_network_seeded(4, 4, 2, seed).unwrap();
            // k = 2: J = {2} is the only sink pattern avoiding 1 and 3.
            for i_set in all_patterns(2) {
                assert!(verify_three_term(&net, &i_set, &[2].into_iter().collect()).unwrap());
                assert!(
                    verify_bijection_refinement(&net, &i_set, &[2].into_iter().collect())
                        .unwrap()
                );
            }
        }
        let net = grid_network_unit(4, 4, 2).unwrap();
        assert!(verify_three_term(&net, &[2].into_iter().collect(), &[1].into_iter().collect())
            .is_err());
    }

    #[test]
    fn parity_relation_on_small_grids() {
        let net = grid_network_seeded(4, 4, 2, 7).unwrap();
        for i_set in all_patterns(2) {
            assert!(verify_parity_relation(&net, &i_set, &[2].into_iter().collect()).unwrap());
            assert!(verify_parity_relation(&net, &i_set, &BTreeSet::new()).unwrap());
        }
        assert!(
            verify_parity_relation(&net, &[2].into_iter().collect(), &[1].into_iter().collect())
                .is_err()
        );
    }
}
