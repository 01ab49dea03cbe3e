use std::fmt;

use super::{confluence_certify, ToricPresentation};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalars::QScalar;

/// `scalar · Y_{a_1}^{e_1} ⋯ Y_{a_r}^{e_r}` in the quantum torus on the
/// join-irreducibles together with the minimum, in their fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusMonomial {
    pub scalar: QScalar,
    pub exponents: Vec<i64>,
}

/// Images of all generators in the quantum torus.
#[derive(Clone, Debug)]
pub struct TorusEmbedding {
    pub irr_plus: Vec<usize>,
    pub images: Vec<TorusMonomial>,
    labels: Vec<String>,
    /// `q_{ab}` between torus generators, by position.
    params: Vec<Vec<QScalar>>,
}

impl TorusEmbedding {
    pub fn mul(&self, x: &TorusMonomial, y: &TorusMonomial) -> Result<TorusMonomial> {
        let r = self.irr_plus.len();
        let mut scalar = x.scalar.mul(&y.scalar);
        for a in 0..r {
            for b in 0..a {
                let e = x.exponents[a] * y.exponents[b];
                if e != 0 {
                    scalar = scalar.mul(&self.params[a][b].pow(e)?);
                }
            }
        }
        let exponents = x
            .exponents
            .iter()
            .zip(&y.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TorusMonomial { scalar, exponents })
    }

    pub fn inv(&self, x: &TorusMonomial) -> Result<TorusMonomial> {
        // (s Y^e)^{-1} = t Y^{-e}, with t fixed by the product being 1.
        let neg = TorusMonomial {
            scalar: QScalar::one(),
            exponents: x.exponents.iter().map(|e| -e).collect(),
        };
        let unit = self.mul(x, &neg)?;
        Ok(TorusMonomial {
            scalar: unit.scalar.inv()?,
            exponents: neg.exponents,
        })
    }

    pub fn scale(&self, s: &QScalar, x: &TorusMonomial) -> TorusMonomial {
        TorusMonomial {
            scalar: s.mul(&x.scalar),
            exponents: x.exponents.clone(),
        }
    }

    /// Checks every defining relation of the presentation on the images.
    pub fn verify(&self, p: &ToricPresentation) -> Result<CheckReport> {
        let l = p.lattice();
        let mut report = CheckReport::default();
        for a in 0..l.len() {
            for b in 0..l.len() {
                let lhs = self.mul(&self.images[a], &self.images[b])?;
                let rhs = if l.comparable(a, b) {
                    self.scale(p.q(a, b), &self.mul(&self.images[b], &self.images[a])?)
                } else {
                    let (lo, hi) = (l.meet(a, b), l.join(a, b));
                    self.scale(p.c(a, b)?, &self.mul(&self.images[lo], &self.images[hi])?)
                };
                report.checked += 1;
                if lhs != rhs {
                    report.fail(format!(
                        "relation ({}, {}): {} vs {}",
                        l.label(a),
                        l.label(b),
                        self.show(&lhs),
                        self.show(&rhs)
                    ));
                }
            }
        }
        Ok(report)
    }

    pub fn show(&self, x: &TorusMonomial) -> String {
        let mut parts = vec![format!("({})", x.scalar)];
        for (k, &e) in x.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("Y[{}]", self.labels[k])),
                _ => parts.push(format!("Y[{}]^{e}", self.labels[k])),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for TorusMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {:?}", self.scalar, self.exponents)
    }
}

/// Embeds a confluent presentation into the quantum torus on `irr⁺(Π)`.
/// A reducible `γ` with first two lower covers `α, β` maps to
/// `c_{αβ}^{-1} X_{α∧β}^{-1} X_α X_β`.
pub fn torus_embedding(p: &ToricPresentation) -> Result<TorusEmbedding> {
    let cert = confluence_certify(p);
    if !cert.is_ok() {
        return Err(Error::NotConfluent(cert.failures.join("; ")));
    }
    let l = p.lattice();
    let (_, irr_plus) = l.join_irreducibles();
    let r = irr_plus.len();
    let params = irr_plus
        .iter()
        .map(|&a| irr_plus.iter().map(|&b| p.q(a, b).clone()).collect())
        .collect();
    let mut emb = TorusEmbedding {
        labels: irr_plus.iter().map(|&a| l.label(a).to_string()).collect(),
        irr_plus,
        images: Vec::new(),
        params,
    };
    let mut images: Vec<Option<TorusMonomial>> = vec![None; l.len()];
    let mut order: Vec<usize> = (0..l.len()).collect();
    let ranks = l.ranks();
    order.sort_by_key(|&x| (ranks[x], x));
    for gamma in order {
        let covers = l.lower_covers(gamma);
        let image = if let Some(k) = emb.irr_plus.iter().position(|&a| a == gamma) {
            let mut exponents = vec![0; r];
            exponents[k] = 1;
            TorusMonomial {
                scalar: QScalar::one(),
                exponents,
            }
        } else {
            let (a, b) = (covers[0], covers[1]);
            let get = |x: usize| {
                images[x]
                    .clone()
                    .expect("lower elements are embedded first")
            };
            let lo_inv = emb.inv(&get(l.meet(a, b)))?;
            let prod = emb.mul(&emb.mul(&lo_inv, &get(a))?, &get(b))?;
            emb.scale(&p.c(a, b)?.inv()?, &prod)
        };
        images[gamma] = Some(image);
    }
    emb.images = images
        .into_iter()
        .map(|x| x.expect("every element is embedded"))
        .collect();
    Ok(emb)
}
