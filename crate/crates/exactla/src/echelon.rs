use perfbase_gf::{Elem, Field};

/// Incrementally built span of vectors in `K^len`.
///
/// Rows are kept with pivot entry 1 and zeros at the pivots of earlier rows,
/// which makes reduction by a single pass in insertion order exact.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    len: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, len: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Residual of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.len, "vector length");
        let f = &self.field;
        let mut r = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = r[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &y) in r.iter_mut().zip(row) {
                if y != 0 {
                    *x = f.add(*x, f.mul(neg, y));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns false (leaving the span unchanged) when dependent.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        let r = self.reduce(v);
        self.insert_reduced(r)
    }

    /// Adds an already reduced residual; returns false when it is zero.
    pub fn insert_reduced(&mut self, mut r: Vec<Elem>) -> bool {
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(r[pc]);
        for x in r.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(r);
        self.pivots.push(pc);
        true
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}
