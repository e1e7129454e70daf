/// Two bits per entry holding a distance modulo 3; the value 3 marks an entry
/// not yet assigned.
#[derive(Clone, PartialEq, Eq)]
pub struct PackedDistanceTable {
    len: u64,
    data: Vec<u8>,
}

pub const UNSET: u8 = 3;

impl PackedDistanceTable {
    pub fn new(len: u64) -> PackedDistanceTable {
        PackedDistanceTable {
            len,
            data: vec![0xff; len.div_ceil(4) as usize],
        }
    }

    pub fn from_bytes(len: u64, data: Vec<u8>) -> Option<PackedDistanceTable> {
        (data.len() as u64 == len.div_ceil(4)).then_some(PackedDistanceTable { len, data })
    }

    /// Pack a table of exact distances.
    pub fn from_distances(d: &[u8]) -> PackedDistanceTable {
        let mut t = PackedDistanceTable::new(d.len() as u64);
        for (i, &x) in d.iter().enumerate() {
            if x != u8::MAX {
                t.set(i as u64, x % 3);
            }
        }
        t
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bytes(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: u64) -> u8 {
        (self.data[(i >> 2) as usize] >> ((i & 3) * 2)) & 3
    }

    #[inline]
    pub fn set(&mut self, i: u64, v: u8) {
        let b = &mut self.data[(i >> 2) as usize];
        let shift = (i & 3) * 2;
        *b = (*b & !(3 << shift)) | ((v & 3) << shift);
    }

    /// Recover exact distances given a neighbor function, by breadth-first
    /// layering from the entries at distance 0 (`roots`).
    pub fn unpack<F, I>(&self, roots: &[u64], neighbors: F) -> Vec<u8>
    where
        F: Fn(u64) -> I,
        I: IntoIterator<Item = u64>,
    {
        let mut out = vec![u8::MAX; self.len as usize];
        let mut frontier: Vec<u64> = roots.to_vec();
        for &r in roots {
            out[r as usize] = 0;
        }
        let mut d = 0u8;
        while !frontier.is_empty() {
            let want = (d + 1) % 3;
            let mut next = Vec::new();
            for &x in &frontier {
                for n in neighbors(x) {
                    if out[n as usize] == u8::MAX && self.get(n) == want {
                        out[n as usize] = d + 1;
                        next.push(n);
                    }
                }
            }
            frontier = next;
            d += 1;
        }
        out
    }
}

/// Given the exact distance `d` of a parent and the stored residue of a
/// neighbor, the neighbor's exact distance.
#[inline]
pub fn step_distance(parent: u8, residue: u8) -> u8 {
    match (residue + 3 - parent % 3) % 3 {
        0 => parent,
        1 => parent + 1,
        _ => parent - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get() {
        let mut t = PackedDistanceTable::new(10);
        assert!((0..10).all(|i| t.get(i) == UNSET));
        t.set(5, 2);
        t.set(6, 0);
        assert_eq!(t.get(5), 2);
        assert_eq!(t.get(6), 0);
        assert_eq!(t.get(4), UNSET);
        assert_eq!(t.bytes().len(), 3);
    }

    #[test]
    fn step() {
        assert_eq!(step_distance(5, 5 % 3), 5);
        assert_eq!(step_distance(5, 6 % 3), 6);
        assert_eq!(step_distance(5, 4 % 3), 4);
        assert_eq!(step_distance(0, 1), 1);
    }
}
