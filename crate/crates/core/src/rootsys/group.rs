use std::collections::HashMap;

use super::{RootSystem, WeylElement, WeylWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct WeylGroupEntry {
    pub word: WeylWord,
    pub element: WeylElement,
    /// Bit `k` is set when positive root `k` lies in `Phi^+(w)`.
    pub inversions: u64,
}

/// Full enumeration of a (small) Weyl group, breadth first, so every stored
/// word is reduced.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    entries: Vec<WeylGroupEntry>,
    index: HashMap<WeylElement, usize>,
}

impl WeylGroup {
    pub fn enumerate(rs: &RootSystem, max_size: usize) -> Result<Self> {
        if rs.num_positive() > 64 {
            return Err(Error::Guard(format!("{} has more than 64 positive roots", rs.label())));
        }
        let id = WeylElement::identity(rs.rank());
        let mut entries = vec![WeylGroupEntry { word: WeylWord::identity(), element: id.clone(), inversions: 0 }];
        let mut index = HashMap::from([(id, 0usize)]);
        let gens: Vec<WeylElement> = (0..rs.rank()).map(|i| rs.simple_reflection(i)).collect();
        let mut head = 0;
        while head < entries.len() {
            let (word, el) = (entries[head].word.clone(), entries[head].element.clone());
            head += 1;
            for (i, g) in gens.iter().enumerate() {
                let next = el.mul(g);
                if index.contains_key(&next) {
                    continue;
                }
                if entries.len() >= max_size {
                    return Err(Error::Guard(format!("|W({})| exceeds {max_size}", rs.label())));
                }
                let mut w = word.0.clone();
                w.push(i);
                let word = WeylWord(w);
                let inversions = mask_of(rs, &next);
                index.insert(next.clone(), entries.len());
                entries.push(WeylGroupEntry { word, element: next, inversions });
            }
        }
        Ok(WeylGroup { entries, index })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[WeylGroupEntry] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &WeylGroupEntry {
        &self.entries[i]
    }

    pub fn find(&self, e: &WeylElement) -> Option<usize> {
        self.index.get(e).copied()
    }
}

pub(crate) fn mask_of(rs: &RootSystem, e: &WeylElement) -> u64 {
    let mut m = 0u64;
    for r in rs.inversion_set_of(e) {
        m |= 1 << rs.root_index(&r).expect("positive root");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    #[test]
    fn group_orders() {
        let cases = [(CartanType::A, 2, 6), (CartanType::A, 3, 24), (CartanType::A, 4, 120), (CartanType::B, 3, 48), (CartanType::G, 2, 12)];
        for (t, n, order) in cases {
            let rs = RootSystem::new(t, n).unwrap();
            let g = WeylGroup::enumerate(&rs, 1200).unwrap();
            assert_eq!(g.len(), order);
            for e in g.entries() {
                assert_eq!(e.inversions.count_ones() as usize, e.word.len());
            }
        }
    }

    #[test]
    fn size_guard() {
        let rs = RootSystem::a(4);
        assert!(matches!(WeylGroup::enumerate(&rs, 100), Err(Error::Guard(_))));
    }
}
