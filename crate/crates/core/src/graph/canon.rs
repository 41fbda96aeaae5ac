//! Canonical labeling of small graphs.
//!
//! The canonical code of a graph on `p` vertices is the lexicographically
//! minimal adjacency bit-string over all vertex orderings, where the string
//! lists, for each position `t = 1..p-1` in turn, the bits
//! `(0,t), (1,t), ..., (t-1,t)` of the reordered adjacency matrix. The code
//! of the identity ordering of a graph equals the canonical code exactly when
//! the graph is canonically labeled; deleting the last vertex of a canonically
//! labeled graph leaves a canonically labeled graph (the code prefix), which
//! is what makes orderly generation work on top of this search.
//!
//! The backtracking places one vertex per position. Two prunings keep it fast
//! and both preserve the exact minimum:
//! - at each node only candidates whose new column is minimal survive (column
//!   bits precede all later bits in the code, so any other branch is already
//!   lexicographically beaten);
//! - among the survivors, a candidate is skipped when it is a *twin* of an
//!   already-explored sibling (swapping the two is an automorphism, so the
//!   subtrees realize the same set of codes).

/// A total-order key identifying an isomorphism class for fixed `p`.
///
/// Byte 0 is `p`; the remaining bytes are the canonical adjacency bit-string
/// packed MSB-first, so byte-wise ordering refines (p, bit-string) ordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel {
    bytes: Vec<u8>,
}

impl CanonicalLabel {
    pub(crate) fn pack(p: usize, code: u64) -> CanonicalLabel {
        let total = p * (p - 1) / 2;
        let nbytes = total.div_ceil(8);
        let mut bytes = Vec::with_capacity(1 + nbytes);
        bytes.push(p as u8);
        let shifted = code << (nbytes * 8 - total);
        for i in (0..nbytes).rev() {
            bytes.push((shifted >> (8 * i) & 0xff) as u8);
        }
        CanonicalLabel { bytes }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

struct Search<'a> {
    rows: &'a [u64],
    p: usize,
    total_bits: usize,
    /// `twins[v]` = bitmask of vertices whose transposition with `v` is an
    /// automorphism of the whole graph.
    twins: Vec<u64>,
    best: Option<u64>,
}

/// Lexicographically minimal adjacency code over all vertex orderings.
/// `rows` must describe at most [`super::CANONICAL_MAX`] vertices.
pub(crate) fn min_code(rows: &[u64]) -> u64 {
    let p = rows.len();
    debug_assert!((1..=super::CANONICAL_MAX).contains(&p));
    if p == 1 {
        return 0;
    }
    let twins = (0..p)
        .map(|v| {
            let mut mask = 0u64;
            for u in 0..p {
                if u == v {
                    continue;
                }
                let outside = !(1u64 << u | 1u64 << v);
                if rows[u] & outside == rows[v] & outside {
                    mask |= 1 << u;
                }
            }
            mask
        })
        .collect();
    let mut search = Search {
        rows,
        p,
        total_bits: p * (p - 1) / 2,
        twins,
        best: None,
    };
    let mut placed = Vec::with_capacity(p);
    search.dfs(&mut placed, 0, 0, 0);
    search.best.expect("search visits at least one leaf")
}

impl Search<'_> {
    fn dfs(&mut self, placed: &mut Vec<usize>, placed_mask: u64, code: u64, bits: usize) {
        let t = placed.len();
        if t == self.p {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        // survivors: available vertices whose column against the placed
        // prefix is minimal
        let mut min_col = u64::MAX;
        let mut survivors: Vec<usize> = Vec::new();
        for v in 0..self.p {
            if placed_mask >> v & 1 == 1 {
                continue;
            }
            let mut col = 0u64;
            for (s, &pv) in placed.iter().enumerate() {
                col |= (self.rows[pv] >> v & 1) << (t - 1 - s);
            }
            if col < min_col {
                min_col = col;
                survivors.clear();
            }
            if col == min_col {
                survivors.push(v);
            }
        }
        let code = code << t | min_col;
        let bits = bits + t;
        if let Some(best) = self.best {
            if code > best >> (self.total_bits - bits) {
                return;
            }
        }
        let mut explored: u64 = 0;
        for v in survivors {
            if self.twins[v] & explored != 0 {
                continue;
            }
            explored |= 1 << v;
            placed.push(v);
            self.dfs(placed, placed_mask | 1 << v, code, bits);
            placed.pop();
        }
    }
}

/// Adjacency code of the ordering as given (positions = current labels).
pub(crate) fn identity_code(rows: &[u64]) -> u64 {
    let p = rows.len();
    let mut code = 0u64;
    for t in 1..p {
        for row in rows.iter().take(t) {
            code = code << 1 | (row >> t & 1);
        }
    }
    code
}

/// Rebuilds adjacency rows from a code produced by [`identity_code`] /
/// [`min_code`].
pub(crate) fn code_to_rows(p: usize, code: u64) -> Vec<u64> {
    let total = p * (p - 1) / 2;
    let mut rows = vec![0u64; p];
    let mut index = 0;
    for t in 1..p {
        for s in 0..t {
            if code >> (total - 1 - index) & 1 == 1 {
                rows[s] |= 1 << t;
                rows[t] |= 1 << s;
            }
            index += 1;
        }
    }
    rows
}
