//! The reference kernel tables mod 2 for word lengths 3..=10, shipped
//! in-repo as CSV with schema `n,s,subset`.

use std::collections::BTreeMap;

use freelie::pascal;

pub const APPENDIX_M2_CSV: &str = include_str!("../data/appendix_m2.csv");

/// Parsed golden rows: `(n, s) -> subsets in listed order` (bitmasks).
pub fn appendix_m2() -> BTreeMap<(usize, usize), Vec<u64>> {
    let mut out: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
    for (idx, line) in APPENDIX_M2_CSV.lines().enumerate() {
        if idx == 0 || line.trim().is_empty() {
            continue;
        }
        let (n, rest) = line.split_once(',').expect("golden row has three fields");
        let (s, subset) = rest.split_once(',').expect("golden row has three fields");
        let n: usize = n.parse().expect("golden n");
        let s: usize = s.parse().expect("golden s");
        let subset = subset.trim().trim_matches('"');
        let mask = pascal::parse_subset(subset).expect("golden subset");
        assert_eq!(mask.count_ones() as usize, s, "golden row size mismatch");
        out.entry((n, s)).or_default().push(mask);
    }
    out
}

/// Serialize one kernel table row in the golden schema.
pub fn csv_row(n: usize, s: usize, mask: u64) -> String {
    format!("{n},{s},\"{}\"", pascal::format_subset(mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_file_parses() {
        let rows = appendix_m2();
        let total: usize = rows.values().map(Vec::len).sum();
        assert_eq!(total, 174);
        assert_eq!(rows[&(3, 1)], vec![pascal::parse_subset("2").unwrap()]);
        assert_eq!(rows[&(10, 5)].len(), 16);
        // rows are listed in ascending tuple order within each (n, s)
        for subsets in rows.values() {
            for pair in subsets.windows(2) {
                assert_eq!(
                    pascal::cmp_subsets(pair[0], pair[1]),
                    std::cmp::Ordering::Less
                );
            }
        }
    }
}
