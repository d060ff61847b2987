//! LaTeX rendering of field elements, parameters, and descriptors.
//!
//! Everything renders deterministically: iteration follows the canonical
//! orders of the underlying types, and equal inputs produce identical
//! text. Single poles render as upright fractions, descriptors as a
//! polynomial block joined with angle-bracketed generator lists, and ray
//! tails as an indexed family over `i`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactfield::{
    FactoredRatFun, GaussianRational, PartialFraction, Polynomial, RatFun,
};
use crate::sl2::{PoleRay, SocleDescriptor};

/// A rational number, as an integer or an upright `\frac`.
pub fn rational(r: &BigRational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    format!("{sign}\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
}

fn imaginary_magnitude(mag: &BigRational) -> String {
    if mag.is_one() {
        "i".to_string()
    } else {
        format!("{}i", rational(mag))
    }
}

/// A field element such as `2-7i` or `\frac{1}{2}+i`.
pub fn gaussian(z: &GaussianRational) -> String {
    if z.re().is_zero() && z.im().is_zero() {
        return "0".to_string();
    }
    if z.im().is_zero() {
        return rational(z.re());
    }
    let imag = imaginary_magnitude(&z.im().abs());
    if z.re().is_zero() {
        let sign = if z.im().is_negative() { "-" } else { "" };
        return format!("{sign}{imag}");
    }
    let sign = if z.im().is_negative() { "-" } else { "+" };
    format!("{}{sign}{imag}", rational(z.re()))
}

fn join_signed(terms: Vec<String>) -> String {
    let mut out = String::new();
    for term in terms {
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out = format!("{out} - {rest}");
        } else {
            out = format!("{out} + {term}");
        }
    }
    out
}

fn power(base: &str, exp: u64) -> String {
    match exp {
        0 => "1".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{{{exp}}}"),
    }
}

/// A polynomial in `h`, highest degree first.
pub fn polynomial(p: &Polynomial) -> String {
    let coeffs = p.coeffs();
    if coeffs.iter().all(Zero::is_zero) {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let monomial = power("h", k as u64);
        let term = if k == 0 {
            gaussian(c)
        } else if c == &GaussianRational::one() {
            monomial
        } else if c == &-&GaussianRational::one() {
            format!("-{monomial}")
        } else {
            let shown = gaussian(c);
            if !c.re().is_zero() && !c.im().is_zero() {
                format!("({shown}){monomial}")
            } else {
                format!("{shown}{monomial}")
            }
        };
        terms.push(term);
    }
    join_signed(terms)
}

/// A linear factor `h - t` with the sign of the root folded in.
pub fn linear_term(root: &GaussianRational) -> String {
    let negated = -root;
    if negated.re().is_zero() && negated.im().is_zero() {
        return "h".to_string();
    }
    let tail = gaussian(&negated);
    if tail.starts_with('-') {
        format!("h{tail}")
    } else {
        format!("h+{tail}")
    }
}

/// A factored rational function as constant times products of linear
/// factors, with negative exponents collected in a denominator.
pub fn factored(f: &FactoredRatFun) -> String {
    let mut numerator = Vec::new();
    let mut denominator = Vec::new();
    for (root, exp) in f.factors() {
        let base = format!("({})", linear_term(root));
        let rendered = power(&base, exp.unsigned_abs());
        if *exp > 0 {
            numerator.push(rendered);
        } else {
            denominator.push(rendered);
        }
    }
    let constant = f.c();
    let mut head = String::new();
    if numerator.is_empty() || constant != &GaussianRational::one() {
        head = if !constant.re().is_zero() && !constant.im().is_zero() {
            format!("({})", gaussian(constant))
        } else {
            gaussian(constant)
        };
    }
    let top = if numerator.is_empty() {
        head
    } else if head.is_empty() {
        numerator.join("")
    } else {
        format!("{head}{}", numerator.join(""))
    };
    if denominator.is_empty() {
        top
    } else {
        format!("\\frac{{{top}}}{{{}}}", denominator.join(""))
    }
}

/// A rational function as a `\frac` of two polynomials.
pub fn rat_fun(f: &RatFun) -> String {
    let num = polynomial(f.num());
    if f.den().degree().unwrap_or(0) == 0 {
        return num;
    }
    format!("\\frac{{{num}}}{{{}}}", polynomial(f.den()))
}

fn pole_denominator(root: &GaussianRational, order: usize) -> String {
    if order == 1 {
        linear_term(root)
    } else {
        format!("({})^{{{order}}}", linear_term(root))
    }
}

/// A partial fraction: polynomial part plus one `\frac` per pole.
pub fn partial_fraction(pf: &PartialFraction) -> String {
    if pf.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    if pf.poly().degree().is_some() {
        terms.push(polynomial(pf.poly()));
    }
    for (root, order, coeff) in pf.pole_entries() {
        let den = pole_denominator(root, order);
        let shown = gaussian(coeff);
        let term = if let Some(rest) = shown.strip_prefix('-') {
            if coeff.re().is_zero() || coeff.im().is_zero() {
                format!("-\\frac{{{rest}}}{{{den}}}")
            } else {
                format!("\\frac{{{shown}}}{{{den}}}")
            }
        } else {
            format!("\\frac{{{shown}}}{{{den}}}")
        };
        terms.push(term);
    }
    join_signed(terms)
}

fn ray_generators(ray: &PoleRay) -> Vec<String> {
    let mut out = Vec::new();
    let mut tail_start = ray.start();
    for (index, bound) in ray.explicit_bounds() {
        if bound > 0 {
            out.push(format!(
                "\\frac{{1}}{{{}}}",
                pole_denominator(&ray.location(index), bound as usize)
            ));
        }
        tail_start = index + 1;
    }
    if ray.tail_bound() > 0 {
        let negated_base = -ray.base();
        let base_terms = gaussian(&negated_base);
        let mut den = "h".to_string();
        if base_terms != "0" {
            if base_terms.starts_with('-') {
                den.push_str(&base_terms);
            } else {
                den.push('+');
                den.push_str(&base_terms);
            }
        }
        let step = -ray.direction();
        match step {
            1 => den.push_str("+i"),
            -1 => den.push_str("-i"),
            s if s > 0 => den.push_str(&format!("+{s}i")),
            s => den.push_str(&format!("{s}i")),
        }
        let body = if ray.tail_bound() == 1 {
            format!("\\frac{{1}}{{{den}}}")
        } else {
            format!("\\frac{{1}}{{({den})^{{{}}}}}", ray.tail_bound())
        };
        out.push(format!("{body} \\;(i \\ge {tail_start})"));
    }
    out
}

/// A socle descriptor: the polynomial block joined with the generator
/// list, infinite rays rendered as families indexed by `i`.
pub fn descriptor(d: &SocleDescriptor) -> String {
    let mut pieces = Vec::new();
    if d.polynomials() {
        pieces.push("\\mathbb{C}[h]".to_string());
    }
    let generators: Vec<String> = d.rays().iter().flat_map(ray_generators).collect();
    if !generators.is_empty() {
        pieces.push(format!(
            "\\left\\langle {} \\right\\rangle",
            generators.join(",\\; ")
        ));
    }
    if pieces.is_empty() {
        return "0".to_string();
    }
    pieces.join(" \\oplus ")
}

/// A graded descriptor pair as two labeled blocks.
pub fn graded_descriptor(even: &SocleDescriptor, odd: &SocleDescriptor) -> String {
    format!(
        "\\text{{even: }} {} \\\\ \\text{{odd: }} {}",
        descriptor(even),
        descriptor(odd)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn field_elements_render_with_fractions() {
        assert_eq!(gaussian(&gi(0)), "0");
        assert_eq!(gaussian(&gi(-3)), "-3");
        assert_eq!(gaussian(&GaussianRational::from_ratio(1, 2)), "\\frac{1}{2}");
        assert_eq!(gaussian(&GaussianRational::i()), "i");
        assert_eq!(gaussian(&-&GaussianRational::i()), "-i");
        let z = GaussianRational::new(
            BigRational::from_integer(2.into()),
            BigRational::from_integer((-7).into()),
        );
        assert_eq!(gaussian(&z), "2-7i");
    }

    #[test]
    fn polynomials_render_highest_degree_first() {
        let p = &Polynomial::h_minus(&gi(3)) * &Polynomial::h_minus(&gi(-1));
        assert_eq!(polynomial(&p), "h^{2} - 2h - 3");
        assert_eq!(polynomial(&Polynomial::new(vec![])), "0");
        let scaled = Polynomial::h().scale(&GaussianRational::from_ratio(-1, 2));
        assert_eq!(polynomial(&scaled), "-\\frac{1}{2}h");
    }

    #[test]
    fn factored_parameters_render_as_products() {
        let u = FactoredRatFun::from_root(gi(3), 2).mul(&FactoredRatFun::from_root(gi(0), -1));
        assert_eq!(factored(&u), "\\frac{(h-3)^{2}}{(h)}");
        let c = FactoredRatFun::constant(GaussianRational::from_ratio(-1, 4)).unwrap();
        assert_eq!(factored(&c), "-\\frac{1}{4}");
    }

    #[test]
    fn partial_fractions_render_each_pole() {
        let pf = &PartialFraction::from_poly(Polynomial::h())
            + &PartialFraction::from_pole(gi(1), 2, gi(-3));
        assert_eq!(partial_fraction(&pf), "h - \\frac{3}{(h-1)^{2}}");
        assert_eq!(
            partial_fraction(&PartialFraction::from_pole(gi(0), 1, GaussianRational::i())),
            "\\frac{i}{h}"
        );
    }

    #[test]
    fn single_fraction_descriptor_renders_as_a_direct_sum() {
        let desc = SocleDescriptor::new(
            true,
            vec![PoleRay::with_drops(gi(3), -2, 1, 1, &[2])],
        );
        assert_eq!(
            descriptor(&desc),
            "\\mathbb{C}[h] \\oplus \\left\\langle \\frac{1}{h-1} \\right\\rangle"
        );
    }

    #[test]
    fn empty_descriptor_renders_the_polynomial_block_alone() {
        let desc = SocleDescriptor::new(true, vec![]);
        assert_eq!(descriptor(&desc), "\\mathbb{C}[h]");
    }

    #[test]
    fn infinite_rays_render_as_indexed_families() {
        let desc = SocleDescriptor::new(
            true,
            vec![PoleRay::from_bounds(gi(3), -2, 1, vec![3], 1)],
        );
        assert_eq!(
            descriptor(&desc),
            "\\mathbb{C}[h] \\oplus \\left\\langle \\frac{1}{(h-1)^{3}},\\; \
             \\frac{1}{h-3+2i} \\;(i \\ge 2) \\right\\rangle"
        );
    }

    #[test]
    fn graded_blocks_are_labeled() {
        let even = SocleDescriptor::new(true, vec![]);
        let odd = SocleDescriptor::new(
            true,
            vec![PoleRay::with_drops(gi(0), 2, 0, 1, &[])],
        );
        let shown = graded_descriptor(&even, &odd);
        assert!(shown.starts_with("\\text{even: } \\mathbb{C}[h]"));
        assert!(shown.contains("\\text{odd: }"));
        assert!(shown.contains("\\frac{1}{h-2i} \\;(i \\ge 0)"));
    }
}
