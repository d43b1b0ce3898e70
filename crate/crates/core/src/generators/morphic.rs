use crate::error::{invalid, Result};
use crate::words::{Alphabet, FiniteWord, InfiniteWord, Letter, WordRef};

/// Letter-to-word map from `source` into `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: Alphabet,
    pub target: Alphabet,
    pub images: Vec<FiniteWord>,
}

impl Morphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<FiniteWord>) -> Result<Self> {
        if images.len() != source.size() {
            return invalid(format!(
                "morphism has {} images for {} letters",
                images.len(),
                source.size()
            ));
        }
        if images.iter().flat_map(|w| w.iter()).any(|&l| l as usize >= target.size()) {
            return invalid("morphism image leaves the target alphabet");
        }
        Ok(Morphism {
            source,
            target,
            images,
        })
    }

    /// Rules like `[("0", "01"), ("1", "10")]`; letters are single
    /// characters and the alphabet is whatever the rules mention.
    pub fn from_rules(rules: &[(&str, &str)]) -> Result<Self> {
        let mut text = String::new();
        for (a, img) in rules {
            if a.chars().count() != 1 {
                return invalid(format!("morphism source `{a}` must be one letter"));
            }
            text.push_str(a);
            text.push_str(img);
        }
        let alphabet = Alphabet::infer(&text)?;
        let mut images = vec![None; alphabet.size()];
        for (a, img) in rules {
            let l = alphabet.index_of(a).expect("inferred");
            if images[l as usize].is_some() {
                return invalid(format!("letter `{a}` has two images"));
            }
            images[l as usize] = Some(alphabet.parse_word(img)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| match w {
                Some(w) => Ok(w),
                None => invalid(format!("no image for letter `{}`", alphabet.name(i as Letter))),
            })
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(alphabet.clone(), alphabet, images)
    }

    pub fn apply(&self, w: &[Letter]) -> FiniteWord {
        let mut out = Vec::new();
        for &l in w {
            out.extend_from_slice(&self.images[l as usize]);
        }
        out.into()
    }

    /// Applies the morphism until the output has at least `n` letters or
    /// the input runs out.
    fn apply_until(&self, w: &[Letter], n: usize) -> Vec<Letter> {
        let mut out = Vec::with_capacity(n);
        for &l in w {
            if out.len() >= n {
                break;
            }
            out.extend_from_slice(&self.images[l as usize]);
        }
        out
    }

    pub fn rules_text(&self) -> String {
        (0..self.source.size())
            .map(|i| {
                format!(
                    "{}->{}",
                    self.source.name(i as Letter),
                    self.target.render(&self.images[i])
                )
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Fixed point of a prolongable endomorphism, starting with `start`.
#[derive(Clone, Debug)]
pub struct MorphicFixedPoint {
    morphism: Morphism,
    start: Letter,
    label: Option<String>,
}

impl MorphicFixedPoint {
    pub fn new(morphism: Morphism, start: Letter) -> Result<Self> {
        if morphism.source != morphism.target {
            return invalid("fixed points need an endomorphism");
        }
        let img = morphism
            .images
            .get(start as usize)
            .ok_or_else(|| crate::Error::InvalidSpec("start letter out of range".into()))?;
        if img.len() < 2 || img[0] != start {
            return invalid(format!(
                "morphism is not prolongable on `{}`: image `{}`",
                morphism.source.name(start),
                morphism.target.render(img)
            ));
        }
        Ok(MorphicFixedPoint {
            morphism,
            start,
            label: None,
        })
    }

    pub fn labelled(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }
}

impl InfiniteWord for MorphicFixedPoint {
    fn alphabet(&self) -> &Alphabet {
        &self.morphism.source
    }
    fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| {
            format!(
                "morphic({}; start={})",
                self.morphism.rules_text(),
                self.morphism.source.name(self.start)
            )
        })
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        let mut w = vec![self.start];
        // prolongable with |σ(start)| >= 2, so every round strictly grows
        while w.len() < n {
            w = self.morphism.apply_until(&w, n);
        }
        w.truncate(n);
        Ok(w.into())
    }
}

/// `σ(x)` for a non-erasing morphism σ.
#[derive(Clone, Debug)]
pub struct MorphicImage {
    morphism: Morphism,
    inner: WordRef,
    map: Vec<Letter>,
    label: Option<String>,
}

impl MorphicImage {
    pub fn new(morphism: Morphism, inner: WordRef) -> Result<Self> {
        if morphism.images.iter().any(|w| w.is_empty()) {
            return invalid("image words need a non-erasing morphism");
        }
        let map = morphism.source.embedding_of(inner.alphabet())?;
        Ok(MorphicImage {
            morphism,
            inner,
            map,
            label: None,
        })
    }

    pub fn labelled(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }
}

impl InfiniteWord for MorphicImage {
    fn alphabet(&self) -> &Alphabet {
        &self.morphism.target
    }
    fn name(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| format!("image({}; {})", self.morphism.rules_text(), self.inner.name()))
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        // each letter yields at least one, so n source letters suffice
        let src = crate::words::window_prefix(self.inner.as_ref(), n)?;
        let src: Vec<Letter> = src.iter().map(|&l| self.map[l as usize]).collect();
        let mut out = self.morphism.apply_until(&src, n);
        if out.len() < n {
            return Err(crate::Error::WindowTooSmall {
                n,
                window: out.len(),
            });
        }
        out.truncate(n);
        Ok(out.into())
    }
    fn finite_len(&self) -> Option<usize> {
        self.inner.finite_len()?;
        let src = crate::words::window_prefix(self.inner.as_ref(), usize::MAX).ok()?;
        Some(src.iter().map(|&l| self.morphism.images[self.map[l as usize] as usize].len()).sum())
    }
}

pub fn thue_morse() -> MorphicFixedPoint {
    let m = Morphism::from_rules(&[("0", "01"), ("1", "10")]).expect("static");
    MorphicFixedPoint::new(m, 0).expect("static").labelled("tm")
}

pub fn fibonacci() -> MorphicFixedPoint {
    let m = Morphism::from_rules(&[("0", "01"), ("1", "0")]).expect("static");
    MorphicFixedPoint::new(m, 0).expect("static").labelled("fib")
}

pub fn tribonacci() -> MorphicFixedPoint {
    let m = Morphism::from_rules(&[("0", "01"), ("1", "02"), ("2", "0")]).expect("static");
    MorphicFixedPoint::new(m, 0).expect("static").labelled("trib")
}

/// `σ(s)` with `σ(0) = G·E`, `σ(1) = G·F`; the letter groups are given as
/// words over single-character names.
pub fn fm_min_complexity_word(g: &str, e: &str, f: &str, s: WordRef) -> Result<MorphicImage> {
    if g.is_empty() {
        return invalid("fm needs a non-empty G");
    }
    if e.is_empty() && f.is_empty() {
        return invalid("fm needs E or F non-empty");
    }
    let all: Vec<char> = g.chars().chain(e.chars()).chain(f.chars()).collect();
    let mut sorted = all.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != all.len() {
        return invalid("fm letter groups G, E, F must be pairwise disjoint");
    }
    if s.alphabet().size() != 2 {
        return invalid("fm base word must be binary");
    }
    let target = Alphabet::new(sorted.iter().map(|c| c.to_string()))?;
    let img0 = target.parse_word(&format!("{g}{e}"))?;
    let img1 = target.parse_word(&format!("{g}{f}"))?;
    let m = Morphism::new(s.alphabet().clone(), target, vec![img0, img1])?;
    let label = format!("fm(G={g}; E={e}; F={f}; s={})", s.name());
    Ok(MorphicImage::new(m, s)?.labelled(&label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::arc;

    fn render(x: &dyn InfiniteWord, n: usize) -> String {
        x.alphabet().render(&x.prefix(n).unwrap())
    }

    #[test]
    fn classic_fixed_points() {
        assert_eq!(render(&thue_morse(), 12), "011010011001");
        assert_eq!(render(&tribonacci(), 13), "0102010010201");
        assert_eq!(render(&fibonacci(), 20), "01001010010010100101");
    }

    #[test]
    fn non_prolongable_rejected() {
        let m = Morphism::from_rules(&[("0", "10"), ("1", "0")]).unwrap();
        assert!(MorphicFixedPoint::new(m, 0).is_err());
        let m = Morphism::from_rules(&[("0", "0"), ("1", "10")]).unwrap();
        assert!(MorphicFixedPoint::new(m, 0).is_err());
    }

    #[test]
    fn fm_images() {
        let u = fm_min_complexity_word("2", "0", "1", arc(fibonacci())).unwrap();
        assert_eq!(render(&u, 10), "2021202021");
        assert!(fm_min_complexity_word("", "0", "1", arc(fibonacci())).is_err());
        assert!(fm_min_complexity_word("2", "2", "1", arc(fibonacci())).is_err());
        let v = fm_min_complexity_word("23", "0", "1", arc(fibonacci())).unwrap();
        assert_eq!(render(&v, 9), "230231230");
    }
}
