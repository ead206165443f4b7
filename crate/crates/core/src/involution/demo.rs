//! A bundled worked example for the sink-swapping involution: a unit-weight
//! 9x9 grid with k = 4 and a specific pair of noncrossing tuples of type
//! ({2,4,6}, {2,4,6}). The CLI trace command and the acceptance suite both
//! replay it.

use crate::error::Result;
use crate::network::{grid_network_unit, Network};
use crate::paths::{Path, Pattern, PncPair};

fn path(net: &Network, coords: &[(i32, i32)]) -> Path {
    coords
        .iter()
        .map(|&c| net.vertex_by_coord(c).expect("coordinate on the grid"))
        .collect()
}

/// The demo network, pattern and pair.
pub fn worked_example() -> Result<(Network, Pattern, PncPair)> {
    let net = grid_network_unit(9, 9, 4)?;
    let red = vec![
        path(
            &net,
            &[
                (3, 1),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 3),
                (6, 3),
                (7, 3),
                (7, 4),
                (7, 5),
                (7, 6),
                (8, 6),
            ],
        ),
        path(
            &net,
            &[
                (2, 2),
                (2, 3),
                (3, 3),
                (3, 4),
                (4, 4),
                (4, 5),
                (5, 5),
                (5, 6),
                (5, 7),
                (6, 7),
                (7, 7),
            ],
        ),
        path(
            &net,
            &[
                (1, 3),
                (1, 4),
                (2, 4),
                (2, 5),
                (2, 6),
                (2, 7),
                (3, 7),
                (4, 7),
                (4, 8),
                (5, 8),
                (6, 8),
            ],
        ),
    ];
    let blue = vec![
        path(
            &net,
            &[
                (4, 1),
                (5, 1),
                (6, 1),
                (7, 1),
                (7, 2),
                (7, 3),
                (8, 3),
                (9, 3),
                (9, 4),
                (9, 5),
                (9, 6),
            ],
        ),
        path(
            &net,
            &[
                (3, 2),
                (4, 2),
                (5, 2),
                (5, 3),
                (5, 4),
                (5, 5),
                (6, 5),
                (7, 5),
                (8, 5),
                (8, 6),
                (8, 7),
            ],
        ),
        path(
            &net,
            &[
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 6),
                (5, 6),
                (6, 6),
                (7, 6),
                (7, 7),
                (7, 8),
            ],
        ),
        path(
            &net,
            &[
                (1, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (1, 8),
                (2, 8),
                (3, 8),
                (3, 9),
                (4, 9),
                (5, 9),
                (6, 9),
            ],
        ),
    ];
    let pattern = Pattern::new([2, 4, 6], [2, 4, 6]);
    Ok((net, pattern, PncPair { red, blue }))
}
