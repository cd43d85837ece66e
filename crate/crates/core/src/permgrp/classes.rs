use std::collections::HashMap;

use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::limits;

/// All elements of a group with an index keyed by base images.
#[derive(Clone, Debug)]
pub struct ElementTable {
    pub elems: Vec<Perm>,
    base: Vec<usize>,
    index: HashMap<Box<[u16]>, u32>,
}

impl ElementTable {
    pub fn new(g: &PermGroup) -> Result<ElementTable> {
        let elems = g.elements()?;
        let base = g.chain().base();
        let mut index = HashMap::with_capacity(elems.len());
        for (i, e) in elems.iter().enumerate() {
            index.insert(key(&base, e), i as u32);
        }
        Ok(ElementTable { elems, base, index })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Index of a group element; `None` if it is not in the group's base-image map.
    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(&key(&self.base, g)).map(|&i| i as usize)
    }

    /// Index of the product of two indexed elements.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let (x, y) = (&self.elems[a], &self.elems[b]);
        let k: Box<[u16]> = self.base.iter().map(|&p| y.apply(x.apply(p)) as u16).collect();
        self.index[&k] as usize
    }

    pub fn inv_index(&self, a: usize) -> usize {
        self.index_of(&self.elems[a].inv()).expect("inverse in group")
    }
}

fn key(base: &[usize], g: &Perm) -> Box<[u16]> {
    base.iter().map(|&p| g.apply(p) as u16).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least element of the class.
    pub representative: Perm,
    pub size: u64,
}

/// Classes with the element-to-class map, for table-based algorithms.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub table: ElementTable,
    pub class_of: Vec<u32>,
    pub classes: Vec<ConjugacyClass>,
    /// Element indices of each class.
    pub members: Vec<Vec<u32>>,
}

impl ClassData {
    pub fn new(g: &PermGroup, max_classes: usize) -> Result<ClassData> {
        let table = ElementTable::new(g)?;
        let n = table.len();
        let mut class_of = vec![u32::MAX; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = raw.len() as u32;
            if raw.len() >= max_classes {
                return Err(Error::scale("MAX_CLASSES", max_classes, format!("more than {max_classes}")));
            }
            class_of[start] = cid;
            let mut orbit = vec![start as u32];
            let mut i = 0;
            while i < orbit.len() {
                let x = &table.elems[orbit[i] as usize];
                for s in g.generators() {
                    let y = table.index_of(&x.conj(s)).expect("conjugate in group");
                    if class_of[y] == u32::MAX {
                        class_of[y] = cid;
                        orbit.push(y as u32);
                    }
                }
                i += 1;
            }
            raw.push(orbit);
        }
        // Canonical order: by least element.
        let mut order: Vec<(Perm, usize)> = raw
            .iter()
            .enumerate()
            .map(|(c, m)| (m.iter().map(|&i| table.elems[i as usize].clone()).min().expect("nonempty"), c))
            .collect();
        order.sort();
        let mut relabel = vec![0u32; raw.len()];
        for (new, (_, old)) in order.iter().enumerate() {
            relabel[*old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }
        let mut members = vec![Vec::new(); raw.len()];
        for (old, m) in raw.into_iter().enumerate() {
            let mut m = m;
            m.sort_unstable();
            members[relabel[old] as usize] = m;
        }
        let classes = order
            .into_iter()
            .zip(&members)
            .map(|((rep, _), m)| ConjugacyClass { representative: rep, size: m.len() as u64 })
            .collect();
        Ok(ClassData { table, class_of, classes, members })
    }
}

/// Conjugacy classes sorted by least element, with sizes.
pub fn conjugacy_classes(g: &PermGroup) -> Result<Vec<ConjugacyClass>> {
    Ok(ClassData::new(g, limits::MAX_CLASSES)?.classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_classes() {
        let g = PermGroup::symmetric(3).unwrap();
        let c = conjugacy_classes(&g).unwrap();
        let mut sizes: Vec<u64> = c.iter().map(|c| c.size).collect();
        assert!(c[0].representative.is_identity());
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }
}
