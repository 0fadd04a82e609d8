//! Finite monoids given by explicit multiplication tables.
//!
//! Elements are the indices `0..size`, with `0` always the identity. A
//! [`VertexMonoid`] validates its table once and then precomputes everything
//! the word-level algorithms ask for repeatedly: idempotents, least left
//! inverses, the classes of the relations R* and R-tilde, and per-element
//! idempotent witnesses.
//!
//! R* relates `a` and `b` when right multiplication by them induces the same
//! equality pattern: `x*a == y*a` iff `x*b == y*b` for all `x`, `y`. R-tilde
//! relates `a` and `b` when the same idempotents fix them on the left. A
//! monoid is left abundant when every element has an idempotent R*-witness,
//! and left Fountain when every element has an idempotent R-tilde-witness.

use crate::error::{Error, Result};

/// An associative multiplication table with no identity requirement.
///
/// This is the raw input for [`SemigroupTable::adjoin_identity`]; everything
/// else in the crate works with [`VertexMonoid`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    size: usize,
    table: Vec<usize>,
}

impl SemigroupTable {
    /// Validates that `rows` is a square table over `0..rows.len()` and that
    /// the operation is associative.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let (size, table) = check_table(&rows)?;
        check_associative(size, &table)?;
        Ok(SemigroupTable { size, table })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    /// Adds a fresh identity element at index 0, shifting the original
    /// elements to `1..=size`. The result is always a valid monoid, even if
    /// the semigroup already had an identity of its own: the old identity
    /// keeps fixing the old elements but does not fix the new 0.
    pub fn adjoin_identity(&self) -> VertexMonoid {
        let n = self.size + 1;
        let mut rows = vec![vec![0; n]; n];
        rows[0] = (0..n).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            row[0] = i;
        }
        for a in 0..self.size {
            for b in 0..self.size {
                rows[a + 1][b + 1] = self.mul(a, b) + 1;
            }
        }
        VertexMonoid::new(rows).expect("adjoining an identity preserves associativity")
    }
}

/// A finite monoid with identity fixed at index 0, plus derived caches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMonoid {
    size: usize,
    table: Vec<usize>,
    idempotent: Vec<bool>,
    idempotents: Vec<usize>,
    left_inv: Vec<Option<usize>>,
    rstar_class: Vec<usize>,
    rtilde_class: Vec<usize>,
    rstar_wit: Vec<Option<usize>>,
    rtilde_wit: Vec<Option<usize>>,
}

impl VertexMonoid {
    /// Validates `rows` as a monoid table: square, in range, identity at
    /// index 0, associative. All caches are built eagerly; a successfully
    /// constructed value answers every query below in O(1).
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let (size, table) = check_table(&rows)?;
        for a in 0..size {
            if table[a] != a || table[a * size] != a {
                return Err(Error::NoIdentityAtZero { witness: a });
            }
        }
        check_associative(size, &table)?;

        let mul = |a: usize, b: usize| table[a * size + b];

        let idempotent: Vec<bool> = (0..size).map(|a| mul(a, a) == a).collect();
        let idempotents: Vec<usize> = (0..size).filter(|&a| idempotent[a]).collect();
        let left_inv: Vec<Option<usize>> = (0..size)
            .map(|a| (0..size).find(|&b| mul(b, a) == 0))
            .collect();

        // R*-classes via the kernel of right multiplication: a and b are
        // related exactly when x -> x*a and x -> x*b partition the monoid
        // the same way. Each element gets the partition in canonical-label
        // form; equal labels mean related.
        let mut seen: Vec<Vec<usize>> = Vec::new();
        let rstar_class: Vec<usize> = (0..size)
            .map(|a| {
                let labels: Vec<usize> = (0..size)
                    .map(|x| (0..=x).find(|&y| mul(y, a) == mul(x, a)).unwrap())
                    .collect();
                intern(&mut seen, labels)
            })
            .collect();

        // R-tilde-classes via the set of idempotent left identities.
        let mut seen: Vec<Vec<usize>> = Vec::new();
        let rtilde_class: Vec<usize> = (0..size)
            .map(|a| {
                let fixers: Vec<usize> = idempotents
                    .iter()
                    .copied()
                    .filter(|&e| mul(e, a) == a)
                    .collect();
                intern(&mut seen, fixers)
            })
            .collect();

        let rstar_wit: Vec<Option<usize>> = (0..size)
            .map(|a| {
                idempotents
                    .iter()
                    .copied()
                    .find(|&e| rstar_class[e] == rstar_class[a])
            })
            .collect();
        // The least idempotent e with e*a == a such that every idempotent
        // fixing a also fixes e. Given e*a == a that condition is exactly
        // membership in a's R-tilde class, but we keep the direct form.
        let rtilde_wit: Vec<Option<usize>> = (0..size)
            .map(|a| {
                idempotents.iter().copied().find(|&e| {
                    mul(e, a) == a
                        && idempotents
                            .iter()
                            .all(|&f| mul(f, a) != a || mul(f, e) == e)
                })
            })
            .collect();

        Ok(VertexMonoid {
            size,
            table,
            idempotent,
            idempotents,
            left_inv,
            rstar_class,
            rtilde_class,
            rstar_wit,
            rtilde_wit,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Table lookup. Panics if an index is out of range; elements coming in
    /// through words are validated against the context first.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idempotent[a]
    }

    /// All idempotents, ascending. Index 0 is always present.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// The least `b` with `b*a == 0`, if any.
    pub fn left_inverse(&self, a: usize) -> Option<usize> {
        self.left_inv[a]
    }

    pub fn is_left_invertible(&self, a: usize) -> bool {
        self.left_inv[a].is_some()
    }

    pub fn rstar_related(&self, a: usize, b: usize) -> bool {
        self.rstar_class[a] == self.rstar_class[b]
    }

    pub fn rtilde_related(&self, a: usize, b: usize) -> bool {
        self.rtilde_class[a] == self.rtilde_class[b]
    }

    /// The least idempotent R*-related to `a`, if any.
    pub fn rstar_idempotent_witness(&self, a: usize) -> Option<usize> {
        self.rstar_wit[a]
    }

    /// The least idempotent `e` with `e*a == a` and `f*a == a` implying
    /// `f*e == e` for every idempotent `f`, if any.
    pub fn rtilde_idempotent_witness(&self, a: usize) -> Option<usize> {
        self.rtilde_wit[a]
    }

    /// Every element has an idempotent R*-witness.
    pub fn is_left_abundant(&self) -> bool {
        self.rstar_wit.iter().all(|w| w.is_some())
    }

    /// Every element has an idempotent R-tilde-witness.
    pub fn is_left_fountain(&self) -> bool {
        self.rtilde_wit.iter().all(|w| w.is_some())
    }

    /// The opposite monoid (transposed table). Right-sided notions of the
    /// original are left-sided notions here.
    pub fn opposite(&self) -> VertexMonoid {
        let rows: Vec<Vec<usize>> = (0..self.size)
            .map(|a| (0..self.size).map(|b| self.mul(b, a)).collect())
            .collect();
        VertexMonoid::new(rows).expect("the opposite of a monoid is a monoid")
    }

    /// The table as nested rows, mostly for debugging and serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// The position of `key` in `seen`, appending it first if new. Used to
/// turn per-element class keys into small class ids.
fn intern(seen: &mut Vec<Vec<usize>>, key: Vec<usize>) -> usize {
    match seen.iter().position(|s| *s == key) {
        Some(c) => c,
        None => {
            seen.push(key);
            seen.len() - 1
        }
    }
}

fn check_table(rows: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let size = rows.len();
    if size == 0 {
        return Err(Error::EmptyTable);
    }
    let mut table = Vec::with_capacity(size * size);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != size {
            return Err(Error::RaggedTable {
                row: i,
                len: row.len(),
                expected: size,
            });
        }
        for &entry in row {
            if entry >= size {
                return Err(Error::IndexOutOfRange {
                    index: entry,
                    bound: size,
                });
            }
            table.push(entry);
        }
    }
    Ok((size, table))
}

fn check_associative(size: usize, table: &[usize]) -> Result<()> {
    let mul = |a: usize, b: usize| table[a * size + b];
    for a in 0..size {
        for b in 0..size {
            let ab = mul(a, b);
            for c in 0..size {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}
