use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

use super::SearchError;

pub const ORACLE_MAX_ORDER: usize = 256;

/// All-pairs distances by Floyd–Warshall. Independent of the BFS code and
/// meant for cross-checking it.
pub fn oracle_apsp(g: &Graph) -> Result<Vec<Vec<u32>>, SearchError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(SearchError::OrderOutOfRange { order: n, min: 1, max: ORACLE_MAX_ORDER });
    }
    const INF: u32 = u32::MAX / 2;
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    if let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| d[i][j] == INF) {
        return Err(SearchError::Disconnected { origin: i, unreached: j });
    }
    Ok(d)
}
