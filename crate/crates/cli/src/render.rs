//! Canonical text rendering: operators in descending `D` powers, every
//! coefficient expanded in descending `x` powers, rationals as `p/q`, square
//! roots as `sqrt(a)` with `a` printed exactly. Rendering over `Q` is stable
//! enough to parse back (`parse(render(L)) = L`).

use dopfactor_core::arith::{BigRational, Field, Polynomial, QuadExt, RationalFunction, Ring};
use dopfactor_core::weyl::DiffOp;

/// How a scalar slots into a product or a sum.
#[derive(Debug, Clone)]
pub struct ScalarParts {
    /// Sign extracted out of the magnitude (for `+`/`-` joining).
    pub negative: bool,
    /// Rendering of the magnitude, without the extracted sign.
    pub magnitude: String,
    /// Whether the magnitude contains a top-level `+`/`-` and must be
    /// parenthesized when juxtaposed with `x` or `D` powers.
    pub compound: bool,
    /// Magnitude is exactly 1 (so it can be dropped in products).
    pub is_unit: bool,
}

pub fn rational_parts(r: &BigRational) -> ScalarParts {
    let negative = *r < BigRational::from_integer(0.into());
    let magnitude = if negative {
        (-r).to_string()
    } else {
        r.to_string()
    };
    ScalarParts {
        negative,
        is_unit: magnitude == "1",
        compound: false,
        magnitude,
    }
}

pub fn quadext_parts(c: &QuadExt) -> ScalarParts {
    let u = c.rational_part();
    let v = c.theta_part();
    if Ring::is_zero(&v.clone()) {
        return rational_parts(u);
    }
    let root = format!("sqrt({})", c.base());
    if Ring::is_zero(&u.clone()) {
        let vp = rational_parts(v);
        let magnitude = if vp.is_unit {
            root
        } else {
            format!("{}*{}", vp.magnitude, root)
        };
        return ScalarParts {
            negative: vp.negative,
            magnitude,
            compound: false,
            is_unit: false,
        };
    }
    // both parts present: render inline, parenthesize in products
    let up = rational_parts(u);
    let vp = rational_parts(v);
    let u_text = if up.negative {
        format!("-{}", up.magnitude)
    } else {
        up.magnitude.clone()
    };
    let v_text = if vp.is_unit {
        root
    } else {
        format!("{}*{}", vp.magnitude, root)
    };
    let joiner = if vp.negative { " - " } else { " + " };
    ScalarParts {
        negative: false,
        magnitude: format!("{}{}{}", u_text, joiner, v_text),
        compound: true,
        is_unit: false,
    }
}

/// A rendered summand: extracted sign plus body text.
struct Term {
    negative: bool,
    body: String,
}

fn join_terms(terms: Vec<Term>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        if i == 0 {
            if t.negative {
                out.push('-');
            }
        } else if t.negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&t.body);
    }
    out
}

fn monomial_term(scalar: ScalarParts, var: &str, power: usize) -> Term {
    let var_text = match power {
        0 => String::new(),
        1 => var.to_string(),
        k => format!("{}^{}", var, k),
    };
    let body = match (power, scalar.is_unit, scalar.compound) {
        // a negated compound summand needs parentheses to keep the sign
        // applied to all of it
        (0, _, true) if scalar.negative => format!("({})", scalar.magnitude),
        (0, _, _) => scalar.magnitude,
        (_, true, _) => var_text,
        (_, false, false) => format!("{}*{}", scalar.magnitude, var_text),
        (_, false, true) => format!("({})*{}", scalar.magnitude, var_text),
    };
    Term {
        negative: scalar.negative,
        body,
    }
}

fn poly_terms<T: Field>(
    p: &Polynomial<T>,
    parts: &impl Fn(&T) -> ScalarParts,
) -> Vec<Term> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    (0..=deg)
        .rev()
        .filter_map(|k| {
            let c = p.coeff(k);
            if c.is_zero() {
                None
            } else {
                Some(monomial_term(parts(&c), "x", k))
            }
        })
        .collect()
}

fn render_poly_with<T: Field>(p: &Polynomial<T>, parts: &impl Fn(&T) -> ScalarParts) -> String {
    join_terms(poly_terms(p, parts))
}

pub fn render_poly_rational(p: &Polynomial<BigRational>) -> String {
    render_poly_with(p, &rational_parts)
}

pub fn render_poly_quadext(p: &Polynomial<QuadExt>) -> String {
    render_poly_with(p, &quadext_parts)
}

/// A polynomial as a single product factor: sign extracted where the
/// leading scalar permits, `compound` whenever more than one term remains.
fn poly_factor_parts<T: Field>(
    p: &Polynomial<T>,
    parts: &impl Fn(&T) -> ScalarParts,
) -> ScalarParts {
    let terms = poly_terms(p, parts);
    match terms.len() {
        0 => ScalarParts {
            negative: false,
            magnitude: "0".to_string(),
            compound: false,
            is_unit: false,
        },
        1 => {
            let t = &terms[0];
            ScalarParts {
                negative: t.negative,
                is_unit: t.body == "1",
                compound: false,
                magnitude: t.body.clone(),
            }
        }
        _ => {
            // extract an overall minus when the leading scalar is negative
            let lead = parts(p.leading().unwrap());
            if lead.negative && !lead.compound {
                let negated = poly_factor_parts(&p.neg(), parts);
                ScalarParts {
                    negative: true,
                    ..negated
                }
            } else {
                ScalarParts {
                    negative: false,
                    magnitude: join_terms(terms),
                    compound: true,
                    is_unit: false,
                }
            }
        }
    }
}

fn ratfunc_factor_parts<T: Field>(
    f: &RationalFunction<T>,
    parts: &impl Fn(&T) -> ScalarParts,
) -> ScalarParts {
    if let Some(p) = f.as_polynomial() {
        return poly_factor_parts(p, parts);
    }
    let num = poly_factor_parts(f.num(), parts);
    let den = render_poly_with(f.den(), parts);
    ScalarParts {
        negative: num.negative,
        magnitude: format!("({})/({})", num.magnitude, den),
        compound: false,
        is_unit: false,
    }
}

pub fn render_ratfunc_quadext(f: &RationalFunction<QuadExt>) -> String {
    let parts = ratfunc_factor_parts(f, &quadext_parts);
    if parts.magnitude == "0" {
        return "0".to_string();
    }
    if parts.negative {
        format!("-{}", parts.magnitude)
    } else {
        parts.magnitude
    }
}

fn op_terms_poly<T: Field>(
    op: &DiffOp<Polynomial<T>>,
    parts: &impl Fn(&T) -> ScalarParts,
) -> Vec<Term> {
    let Some(order) = op.order() else {
        return Vec::new();
    };
    let mut terms = Vec::new();
    for i in (0..=order).rev() {
        let c = op.coeff(i);
        if c.is_zero() {
            continue;
        }
        if i == 0 {
            // the constant coefficient joins the sum monomial by monomial
            terms.extend(poly_terms(&c, parts));
        } else {
            terms.push(monomial_term(poly_factor_parts(&c, parts), "D", i));
        }
    }
    terms
}

pub fn render_op_rational(op: &DiffOp<Polynomial<BigRational>>) -> String {
    join_terms(op_terms_poly(op, &rational_parts))
}

pub fn render_op_quadext(op: &DiffOp<Polynomial<QuadExt>>) -> String {
    join_terms(op_terms_poly(op, &quadext_parts))
}

pub fn render_op_ratfunc(op: &DiffOp<RationalFunction<QuadExt>>) -> String {
    let Some(order) = op.order() else {
        return "0".to_string();
    };
    let mut terms = Vec::new();
    for i in (0..=order).rev() {
        let c = op.coeff(i);
        if c.is_zero() {
            continue;
        }
        match (i, c.as_polynomial()) {
            (0, Some(p)) => terms.extend(poly_terms(p, &quadext_parts)),
            _ => terms.push(monomial_term(
                ratfunc_factor_parts(&c, &quadext_parts),
                "D",
                i,
            )),
        }
    }
    join_terms(terms)
}

pub fn render_rational(r: &BigRational) -> String {
    r.to_string()
}

pub fn render_quadext(c: &QuadExt) -> String {
    let parts = quadext_parts(c);
    if c.is_zero() {
        return "0".to_string();
    }
    if parts.negative {
        format!("-{}", parts.magnitude)
    } else {
        parts.magnitude
    }
}

/// The coefficient field as displayed in verdicts: `Q(x)` or
/// `Q(sqrt(a))(x)` for a non-square base.
pub fn render_field(base: &BigRational) -> String {
    if dopfactor_core::arith::rational_sqrt(base).is_some() {
        "Q(x)".to_string()
    } else {
        format!("Q(sqrt({}))(x)", base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_operator;
    use dopfactor_core::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn poly(cs: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn polynomial_rendering() {
        assert_eq!(render_poly_rational(&poly(&[-3, 0, 1])), "x^2 - 3");
        assert_eq!(render_poly_rational(&poly(&[])), "0");
        assert_eq!(render_poly_rational(&poly(&[0, -1])), "-x");
        let half = Polynomial::new(vec![BigRational::new(BigInt::from(1), BigInt::from(2))]);
        assert_eq!(render_poly_rational(&half), "1/2");
    }

    #[test]
    fn operator_rendering() {
        let op = parse_operator("D^2 - x").unwrap();
        assert_eq!(render_op_rational(&op), "D^2 - x");
        let op = parse_operator("D^2 - (x^2 + 1)*D + 3*x").unwrap();
        assert_eq!(render_op_rational(&op), "D^2 - (x^2 + 1)*D + 3*x");
        let op = parse_operator("x^2 - D").unwrap();
        assert_eq!(render_op_rational(&op), "-D + x^2");
        assert_eq!(render_op_rational(&DiffOp::zero()), "0");
    }

    #[test]
    fn quadext_rendering() {
        let base = BigRational::from_integer(BigInt::from(2));
        let theta = QuadExt::theta(base.clone());
        assert_eq!(render_quadext(&theta), "sqrt(2)");
        assert_eq!(render_quadext(&theta.neg()), "-sqrt(2)");
        let mixed = QuadExt::new(base.clone(), rat(1), rat(-2));
        assert_eq!(render_quadext(&mixed), "1 - 2*sqrt(2)");
        let two_theta = theta.add(&theta);
        assert_eq!(render_quadext(&two_theta), "2*sqrt(2)");
        assert_eq!(render_quadext(&QuadExt::zero()), "0");
    }

    #[test]
    fn field_rendering() {
        assert_eq!(render_field(&rat(1)), "Q(x)");
        assert_eq!(render_field(&rat(4)), "Q(x)");
        assert_eq!(render_field(&rat(2)), "Q(sqrt(2))(x)");
        assert_eq!(
            render_field(&BigRational::new(BigInt::from(-1), BigInt::from(1))),
            "Q(sqrt(-1))(x)"
        );
    }

    #[test]
    fn round_trip_simple() {
        for src in [
            "D^2 - x",
            "D^2 - (x^4*4 + 3*x^3)",
            "x*D + 1",
            "-D + x^2",
            "D^3 - 1/2*D + (x^2 - 3)*D^2 - 7",
        ] {
            let op = parse_operator(src).unwrap();
            let rendered = render_op_rational(&op);
            let reparsed = parse_operator(&rendered).unwrap();
            assert_eq!(reparsed, op, "{} -> {}", src, rendered);
        }
    }
}
