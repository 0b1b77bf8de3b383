use std::fmt;

/// Element of W stored as the images of the positive roots under the signed
/// root numbering (positives `0..N`, `r + N` is `−r`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub(crate) Box<[u16]>);

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{:?}", &self.0[..])
    }
}

impl Element {
    pub fn identity(npos: usize) -> Element {
        Element((0..npos as u16).collect())
    }

    #[inline]
    pub fn npos(&self) -> usize {
        self.0.len()
    }

    #[inline]
    fn neg(&self, x: u16) -> u16 {
        let n = self.0.len() as u16;
        if x < n {
            x + n
        } else {
            x - n
        }
    }

    /// Image of a signed root index.
    #[inline]
    pub fn apply(&self, x: u16) -> u16 {
        let n = self.0.len() as u16;
        if x < n {
            self.0[x as usize]
        } else {
            self.neg(self.0[(x - n) as usize])
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Element) -> Element {
        Element(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> Element {
        let n = self.0.len();
        let mut out = vec![0u16; n];
        for (r, &x) in self.0.iter().enumerate() {
            let x = x as usize;
            if x < n {
                out[x] = r as u16;
            } else {
                out[x - n] = (r + n) as u16;
            }
        }
        Element(out.into_boxed_slice())
    }

    pub fn length(&self) -> usize {
        let n = self.0.len() as u16;
        self.0.iter().filter(|&&x| x >= n).count()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x as usize == i)
    }

    /// `s_i` is a right descent iff `w(α_i) < 0`.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i] as usize >= self.0.len()
    }

    /// `s_i` is a left descent iff `w⁻¹(α_i) < 0`, i.e. some positive root is
    /// sent to `−α_i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let target = (i + self.0.len()) as u16;
        self.0.contains(&target)
    }

    /// Images of the first `rank` roots; determines the element.
    pub fn key(&self, rank: usize) -> Box<[u16]> {
        self.0[..rank].into()
    }

    /// Power of the element under composition.
    pub fn pow(&self, k: usize) -> Element {
        let mut acc = Element::identity(self.npos());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Conjugate `p ∘ self ∘ p⁻¹`.
    pub fn conjugate_by(&self, p: &Element) -> Element {
        p.compose(self).compose(&p.inverse())
    }
}
