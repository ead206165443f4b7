//! Bundled worked examples with frozen expected output. The CLI replay
//! command regenerates each text and diffs it against the checked-in
//! golden copy; the acceptance suite does the same.

use std::collections::BTreeMap;

use num::BigRational;

use crate::algebra::{Poly, Var};
use crate::error::Result;
use crate::involution::{demo, render_trace, tau};
use crate::network::schur_identity_network;
use crate::paths::{pair_weight, pattern_weight, Pattern, WeightMode};
use crate::rsk::{RskArrays, RskInput};
use crate::schur::{verify_identity, Identity, Partition};

pub const TAU_TRACE_GOLDEN: &str = include_str!("../golden/tau_trace.txt");
pub const RSK_TABLES_GOLDEN: &str = include_str!("../golden/rsk_2x2.txt");
pub const SCHUR_INSTANCE_GOLDEN: &str = include_str!("../golden/schur_instance.txt");

/// The worked sink-swap trace on the bundled 9x9 pair.
pub fn tau_trace_text() -> Result<String> {
    let (net, pattern, pair) = demo::worked_example()?;
    let (out, trace) = tau(&net, &pattern, &pair)?;
    let mut text = String::from("network: grid 9x9 k=4 weights=unit\n");
    text.push_str(&render_trace(&net, &pattern, &trace));
    let out_pattern = Pattern {
        i: pattern.i.clone(),
        j: trace.output_j[0].clone(),
    };
    let (back, _) = tau(&net, &out_pattern, &out)?;
    text.push_str(&format!("involution: tau(tau(pair)) == pair: {}\n", back == pair));
    text.push_str(&format!(
        "weight preserved: {}\n",
        pair_weight(&net, &pair) == pair_weight(&net, &out)
    ));
    Ok(text)
}

/// The symbolic 2x2 birational RSK tables with all three verifications.
pub fn rsk_tables_text() -> Result<String> {
    let arrays = RskArrays::compute(RskInput::symbolic(2, 2)?)?;
    let mut text = String::from("input: symbolic 2x2\n");
    text.push_str(&arrays.render_tables());
    text.push_str(&format!(
        "verify: octahedron={} star={} y-recursion={}\n",
        arrays.verify_octahedron()?,
        arrays.verify_star_all()?,
        arrays.verify_y_recursion()?
    ));
    Ok(text)
}

/// The flagged three-term identity instance behind the bundled network
/// drawing: the network-side relation with its path counts, and the
/// polynomial identity itself.
pub fn schur_instance_text() -> Result<String> {
    let lambda = Partition::new([3, 2, 2, 1])?;
    let (t, n) = (1u32, 5u32);
    let net = schur_identity_network(lambda.parts(), t, n)?;
    let mut text = format!("network: flagged identity lambda=(3,2,2,1) t={t} n={n}\n");
    let len = 2 * net.k() - 1;
    let j: std::collections::BTreeSet<u32> = [2u32, 4, 6].into();
    let j1: std::collections::BTreeSet<u32> = (2..=len).filter(|x| !j.contains(x)).collect();
    let j2: std::collections::BTreeSet<u32> = (1..=len - 1).filter(|x| !j.contains(x)).collect();
    let i: std::collections::BTreeSet<u32> = [2u32, 4, 6].into();
    let w = |jj: &std::collections::BTreeSet<u32>| -> Result<Poly> {
        pattern_weight(
            &net,
            &Pattern {
                i: i.clone(),
                j: jj.clone(),
            },
            &WeightMode::Edge,
        )
    };
    let (wj, wj1, wj2) = (w(&j)?, w(&j1)?, w(&j2)?);
    text.push_str(&format!(
        "three-term relation wt(I,J) = wt(I,J') + wt(I,J''): {}\n",
        wj == &wj1 + &wj2
    ));
    let ones: BTreeMap<Var, BigRational> = (1..=n)
        .map(|v| (v as Var, BigRational::from_integer(1.into())))
        .collect();
    text.push_str(&format!(
        "pair counts at unit weights: {} = {} + {}\n",
        wj.eval(&ones)?,
        wj1.eval(&ones)?,
        wj2.eval(&ones)?
    ));
    text.push_str(&format!(
        "polynomial identity at n={n}: {}\n",
        verify_identity(&Identity::FlaggedThreeTerm { lambda, t }, n)?
    ));
    Ok(text)
}

/// Regenerate every bundled example and pair it with its golden text.
pub fn replay_all() -> Result<Vec<(&'static str, &'static str, String)>> {
    Ok(vec![
        ("tau-trace", TAU_TRACE_GOLDEN, tau_trace_text()?),
        ("rsk-tables", RSK_TABLES_GOLDEN, rsk_tables_text()?),
        ("schur-instance", SCHUR_INSTANCE_GOLDEN, schur_instance_text()?),
    ])
}

/// First differing line, if any.
pub fn first_diff(expected: &str, actual: &str) -> Option<String> {
    let mut e = expected.lines();
    let mut a = actual.lines();
    let mut line = 0usize;
    loop {
        line += 1;
        match (e.next(), a.next()) {
            (None, None) => return None,
            (le, la) if le != la => {
                return Some(format!(
                    "line {line}: expected {:?}, got {:?}",
                    le.unwrap_or("<eof>"),
                    la.unwrap_or("<eof>")
                ))
            }
            _ => {}
        }
    }
}
