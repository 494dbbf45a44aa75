/// An integer partition stored as (part, multiplicity) pairs with parts
/// strictly decreasing, e.g. 7 = 3+2+2 is [(3,1), (2,2)].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<(u64, u64)>,
}

impl Partition {
    /// (part, multiplicity) pairs, parts strictly decreasing.
    pub fn parts(&self) -> &[(u64, u64)] {
        &self.parts
    }

    /// The partitioned integer: sum of part * multiplicity.
    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&(part, mult)| part * mult).sum()
    }

    /// Total number of parts counted with multiplicity.
    pub fn num_parts(&self) -> u64 {
        self.parts.iter().map(|&(_, mult)| mult).sum()
    }

    fn from_expanded(expanded: &[u64]) -> Self {
        let mut parts: Vec<(u64, u64)> = Vec::new();
        for &p in expanded {
            match parts.last_mut() {
                Some((part, mult)) if *part == p => *mult += 1,
                _ => parts.push((p, 1)),
            }
        }
        Partition { parts }
    }
}

/// All integer partitions of q, in decreasing-lexicographic order of the
/// expanded part lists: q=4 yields {4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}.
/// q=0 yields the single empty partition.
pub fn partitions_of(q: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    descend(q, q, &mut current, &mut out);
    out
}

fn descend(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_expanded(current));
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= 1 {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}
