//! Enumeration of ordered profiles `mu`.

/// All ordered tuples of positive integers summing to `d`, by number of parts
/// and then lexicographically.
pub fn compositions(d: u64) -> Vec<Vec<u64>> {
    (1..=d as usize).flat_map(|n| compositions_into(d, n)).collect()
}

/// Ordered tuples of `n` positive integers summing to `d`.
pub fn compositions_into(d: u64, n: usize) -> Vec<Vec<u64>> {
    fn go(left: u64, parts: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            if left >= 1 {
                current.push(left);
                out.push(current.clone());
                current.pop();
            }
            return;
        }
        for first in 1..left {
            current.push(first);
            go(left - first, parts - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        go(d, n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Partitions of `d` with parts sorted descending and at most `max_parts` parts.
pub fn partitions(d: u64, max_parts: usize) -> Vec<Vec<u64>> {
    fn go(left: u64, cap: u64, max_parts: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        if current.len() == max_parts {
            return;
        }
        for part in (1..=cap.min(left)).rev() {
            current.push(part);
            go(left - part, part, max_parts, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if d >= 1 {
        go(d, d, max_parts, &mut Vec::new(), &mut out);
    }
    out
}
