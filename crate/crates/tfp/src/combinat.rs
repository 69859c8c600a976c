//! Small enumeration helpers: compositions and contingency tables.

/// All vectors of `parts` nonnegative integers summing to `total`, in
/// descending lexicographic order.
pub fn compositions(total: i32, parts: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = vec![0i32; parts];
    fn rec(k: usize, rest: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if k + 1 == cur.len() {
            cur[k] = rest;
            out.push(cur.clone());
            return;
        }
        for x in (0..=rest).rev() {
            cur[k] = x;
            rec(k + 1, rest - x, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// Nonnegative integer matrices with the given row and column sums, row-major.
pub fn tables(rows: &[i32], cols: &[i32]) -> Vec<Vec<i32>> {
    let (m, n) = (rows.len(), cols.len());
    let mut out = Vec::new();
    if rows.iter().sum::<i32>() != cols.iter().sum::<i32>() {
        return out;
    }
    let mut cur = vec![0i32; m * n];
    let mut cap = cols.to_vec();
    fn fill(
        r: usize,
        c: usize,
        left_in_row: i32,
        rows: &[i32],
        cap: &mut Vec<i32>,
        cur: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        let (m, n) = (rows.len(), cap.len());
        if r == m {
            if cap.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        if c + 1 == n {
            if left_in_row > cap[c] {
                return;
            }
            cur[r * n + c] = left_in_row;
            cap[c] -= left_in_row;
            let next = if r + 1 < m { rows[r + 1] } else { 0 };
            fill(r + 1, 0, next, rows, cap, cur, out);
            cap[c] += left_in_row;
            cur[r * n + c] = 0;
            return;
        }
        for x in (0..=left_in_row.min(cap[c])).rev() {
            cur[r * n + c] = x;
            cap[c] -= x;
            fill(r, c + 1, left_in_row - x, rows, cap, cur, out);
            cap[c] += x;
        }
        cur[r * n + c] = 0;
    }
    if m == 0 || n == 0 {
        if rows.iter().all(|&x| x == 0) && cols.iter().all(|&x| x == 0) {
            out.push(cur);
        }
        return out;
    }
    fill(0, 0, rows[0], rows, &mut cap, &mut cur, &mut out);
    out
}

/// Cartesian product of option lists, first factor varying slowest.
pub fn cartesian<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for f in factors {
        let mut next = Vec::with_capacity(out.len() * f.len());
        for prefix in &out {
            for x in f {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Product of list sizes, saturating.
pub fn product_size<T>(factors: &[Vec<T>]) -> usize {
    factors.iter().fold(1usize, |acc, f| acc.saturating_mul(f.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 0), vec![Vec::<i32>::new()]);
        assert!(compositions(1, 0).is_empty());
    }

    #[test]
    fn table_counts() {
        assert_eq!(tables(&[1, 1], &[1, 1]).len(), 2);
        assert_eq!(tables(&[2, 2], &[2, 2]).len(), 3);
        assert!(tables(&[1], &[2]).is_empty());
        for t in tables(&[2, 1, 3], &[3, 3]) {
            assert_eq!(t[0] + t[1], 2);
            assert_eq!(t[4] + t[5], 3);
            assert_eq!(t[0] + t[2] + t[4], 3);
        }
    }

    #[test]
    fn cartesian_order() {
        let p = cartesian(&[vec![0, 1], vec![5]]);
        assert_eq!(p, vec![vec![0, 5], vec![1, 5]]);
        assert_eq!(product_size(&[vec![0; 3], vec![0; 4]]), 12);
    }
}
