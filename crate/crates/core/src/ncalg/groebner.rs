use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{MonomialOrder, NcError, NcPolynomial, Presentation, Word};
use crate::linalg::Rational;

/// Rewriting rule `lead -> tail`, with every word of `tail` smaller than
/// `lead`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub tail: NcPolynomial,
}

impl Rule {
    /// `lead - tail`, the ideal element this rule encodes.
    pub fn as_polynomial(&self) -> NcPolynomial {
        &NcPolynomial::monomial(self.lead.clone(), Rational::one()) - &self.tail
    }
}

/// Interreduced rewriting system for a two-sided ideal.
///
/// `complete` means every overlap ambiguity of the rules was resolved and
/// none of the rules had to be created at the degree bound itself. Only then
/// are normal forms unique and normal words a basis of the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: usize,
    rules: Vec<Rule>,
    order: MonomialOrder,
    degree_bound: usize,
    complete: bool,
}

impl GroebnerBasis {
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    /// True if no leading word occurs in `w`.
    pub fn is_normal(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| !w.contains(&r.lead))
    }
}

/// A presentation together with its completed rewriting system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    pub presentation: Presentation,
    pub basis: GroebnerBasis,
}

impl QuotientAlgebra {
    pub fn new(presentation: Presentation, order: MonomialOrder, degree_bound: usize) -> Result<Self, NcError> {
        let basis = complete_groebner(&presentation, &order, degree_bound)?;
        Ok(QuotientAlgebra { presentation, basis })
    }

    pub fn normal_form(&self, p: &NcPolynomial) -> NcPolynomial {
        normal_form(p, &self.basis)
    }
}

/// Reduces `p` until no term contains a leading word. The largest reducible
/// term is rewritten first, at its leftmost match, by the first matching rule.
pub fn normal_form(p: &NcPolynomial, gb: &GroebnerBasis) -> NcPolynomial {
    reduce(p, &gb.rules, &gb.order)
}

fn find_reducer(w: &Word, rules: &[Rule]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, rule) in rules.iter().enumerate() {
        if let Some(at) = w.find(&rule.lead) {
            if best.is_none_or(|(b, _)| at < b) {
                best = Some((at, r));
            }
        }
    }
    best
}

fn reduce(p: &NcPolynomial, rules: &[Rule], order: &MonomialOrder) -> NcPolynomial {
    let mut work: BTreeMap<(usize, Vec<usize>), (Word, Rational)> = BTreeMap::new();
    let push = |work: &mut BTreeMap<(usize, Vec<usize>), (Word, Rational)>, w: Word, c: Rational| {
        let key = order.key(&w);
        match work.get_mut(&key) {
            Some((_, old)) => {
                *old += c;
                if old.is_zero() {
                    work.remove(&key);
                }
            }
            None => {
                work.insert(key, (w, c));
            }
        }
    };
    for (w, c) in p.terms() {
        push(&mut work, w.clone(), c.clone());
    }
    let mut out = NcPolynomial::zero();
    while let Some((_, (w, c))) = work.pop_last() {
        match find_reducer(&w, rules) {
            Some((at, r)) => {
                let (left, right) = w.around(at, rules[r].lead.degree());
                for (tw, tc) in rules[r].tail.terms() {
                    push(&mut work, left.concat(tw).concat(&right), &c * tc);
                }
            }
            None => out.add_term(w, c),
        }
    }
    out
}

/// Adds `p` to the system, keeping it interreduced: leading words pairwise
/// non-divisible and every tail in normal form.
fn insert(rules: &mut Vec<Rule>, p: NcPolynomial, order: &MonomialOrder) {
    let mut queue = alloc::vec![p];
    while let Some(p) = queue.pop() {
        let h = reduce(&p, rules, order);
        let Some((lead, c)) = h.leading_term(order).map(|(w, c)| (w.clone(), c.clone())) else {
            continue;
        };
        let monic = h.scale(&(Rational::one() / c));
        let tail = -&(&monic - &NcPolynomial::monomial(lead.clone(), Rational::one()));
        let (dropped, kept): (Vec<Rule>, Vec<Rule>) =
            core::mem::take(rules).into_iter().partition(|r| r.lead.contains(&lead));
        *rules = kept;
        queue.extend(dropped.iter().map(Rule::as_polynomial));
        rules.push(Rule { lead, tail });
        for i in 0..rules.len() {
            let t = reduce(&rules[i].tail, rules, order);
            rules[i].tail = t;
        }
        rules.sort_by(|a, b| order.compare(&a.lead, &b.lead));
    }
}

#[derive(Debug, Clone, Copy)]
struct Ambiguity {
    degree: usize,
    left: usize,
    right: usize,
    overlap: usize,
}

/// Overlap ambiguities `lead_left = A·B`, `lead_right = B·C` with `A`, `B`,
/// `C` nonempty, ordered by the degree of `A·B·C`.
fn ambiguities(rules: &[Rule]) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        for (j, rj) in rules.iter().enumerate() {
            let (li, lj) = (ri.lead.letters(), rj.lead.letters());
            for k in 1..li.len().min(lj.len()) {
                if li[li.len() - k..] == lj[..k] {
                    out.push(Ambiguity {
                        degree: li.len() + lj.len() - k,
                        left: i,
                        right: j,
                        overlap: k,
                    });
                }
            }
        }
    }
    out.sort_by_key(|a| (a.degree, a.left, a.right, a.overlap));
    out
}

fn s_polynomial(rules: &[Rule], amb: &Ambiguity) -> NcPolynomial {
    let li = &rules[amb.left].lead;
    let lj = &rules[amb.right].lead;
    let a = li.slice(0, li.degree() - amb.overlap);
    let c = lj.slice(amb.overlap, lj.degree());
    let via_left = rules[amb.left].tail.sandwich(&Word::unit(), &c);
    let via_right = rules[amb.right].tail.sandwich(&a, &Word::unit());
    &via_left - &via_right
}

/// Completes the relations of `pres` into an interreduced rewriting system,
/// resolving overlap ambiguities of degree at most `degree_bound` in
/// increasing degree.
pub fn complete_groebner(
    pres: &Presentation,
    order: &MonomialOrder,
    degree_bound: usize,
) -> Result<GroebnerBasis, NcError> {
    if order.generator_count() != pres.generator_count() {
        return Err(NcError::OrderMismatch {
            order: order.generator_count(),
            presentation: pres.generator_count(),
        });
    }
    let mut rules = Vec::new();
    for (i, r) in pres.relations().iter().enumerate() {
        let degree = r.degree().ok_or(NcError::CannotOrient(i))?;
        if degree > degree_bound {
            return Err(NcError::DegreeBoundTooSmall {
                bound: degree_bound,
                degree,
            });
        }
        insert(&mut rules, r.clone(), order);
    }
    let mut produced_at_bound = false;
    let complete = loop {
        let ambs = ambiguities(&rules);
        let skipped = ambs.iter().any(|a| a.degree > degree_bound);
        let unresolved = ambs.iter().filter(|a| a.degree <= degree_bound).find_map(|a| {
            let h = reduce(&s_polynomial(&rules, a), &rules, order);
            (!h.is_zero()).then_some((h, a.degree))
        });
        match unresolved {
            Some((h, degree)) => {
                produced_at_bound |= degree == degree_bound;
                insert(&mut rules, h, order);
            }
            None => break !skipped && !produced_at_bound,
        }
    };
    Ok(GroebnerBasis {
        generators: pres.generator_count(),
        rules,
        order: order.clone(),
        degree_bound,
        complete,
    })
}

/// All words of length `degree` avoiding every leading word, ascending in
/// the basis order.
pub fn normal_words(gb: &GroebnerBasis, degree: usize) -> Result<Vec<Word>, NcError> {
    if !gb.complete {
        return Err(NcError::IncompleteBasis);
    }
    let mut out = Vec::new();
    let mut stack = alloc::vec![Word::unit()];
    while let Some(w) = stack.pop() {
        if gb.rules.iter().any(|r| w.ends_with(&r.lead)) {
            continue;
        }
        if w.degree() == degree {
            out.push(w);
            continue;
        }
        for g in 0..gb.generators {
            stack.push(w.concat(&Word::letter(g)));
        }
    }
    out.sort_by(|a, b| gb.order.compare(a, b));
    Ok(out)
}

/// Normal words of every degree `0..=max_degree`, by degree then order.
pub fn normal_words_up_to(gb: &GroebnerBasis, max_degree: usize) -> Result<Vec<Word>, NcError> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        out.extend(normal_words(gb, d)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::ncalg::family_presentation;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    fn a1() -> GroebnerBasis {
        complete_groebner(&family_presentation(&rat(1, 1)), &MonomialOrder::deglex(2), 4).unwrap()
    }

    #[test]
    fn a1_is_a_single_rule() {
        let gb = a1();
        assert!(gb.is_complete());
        assert_eq!(gb.rules().len(), 1);
        assert_eq!(gb.rules()[0].lead, w(&[0, 1]));
        let expected = NcPolynomial::from_terms([(w(&[1, 0]), rat(1, 1)), (w(&[0]), rat(1, 1))]);
        assert_eq!(gb.rules()[0].tail, expected);
    }

    #[test]
    fn a0_kills_x() {
        let gb = complete_groebner(&family_presentation(&rat(0, 1)), &MonomialOrder::deglex(2), 4).unwrap();
        assert!(gb.is_complete());
        assert_eq!(
            gb.rules(),
            &[Rule {
                lead: w(&[0]),
                tail: NcPolynomial::zero()
            }]
        );
        assert_eq!(normal_words(&gb, 3).unwrap(), vec![w(&[1, 1, 1])]);
    }

    #[test]
    fn free_algebra_is_complete() {
        let pres = Presentation::new(vec!["x".into(), "y".into()], vec![]).unwrap();
        let gb = complete_groebner(&pres, &MonomialOrder::deglex(2), 4).unwrap();
        assert!(gb.rules().is_empty() && gb.is_complete());
        assert_eq!(normal_words(&gb, 3).unwrap().len(), 8);
    }

    #[test]
    fn normal_form_examples() {
        let gb = a1();
        let y = NcPolynomial::generator(1);
        assert_eq!(normal_form(&y, &gb), y);
        let xy = NcPolynomial::monomial(w(&[0, 1]), rat(1, 1));
        let expected = NcPolynomial::from_terms([(w(&[1, 0]), rat(1, 1)), (w(&[0]), rat(1, 1))]);
        assert_eq!(normal_form(&xy, &gb), expected);
        let xxy = NcPolynomial::monomial(w(&[0, 0, 1]), rat(1, 1));
        let expected = NcPolynomial::from_terms([(w(&[1, 0, 0]), rat(1, 1)), (w(&[0, 0]), rat(2, 1))]);
        assert_eq!(normal_form(&xxy, &gb), expected);
    }

    #[test]
    fn a1_normal_words_degree_two() {
        let gb = a1();
        assert_eq!(normal_words(&gb, 0).unwrap(), vec![Word::unit()]);
        assert_eq!(normal_words(&gb, 2).unwrap(), vec![w(&[1, 1]), w(&[1, 0]), w(&[0, 0])]);
    }

    #[test]
    fn overlaps_produce_new_rules() {
        // x^2 = x, xy = y: overlap x·x·y gives nothing new, but
        // yx = x together with xx = y needs completion.
        let pres = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![
                NcPolynomial::from_terms([(w(&[0, 0]), rat(1, 1)), (w(&[1]), rat(-1, 1))]),
                NcPolynomial::from_terms([(w(&[1, 0]), rat(1, 1)), (w(&[0]), rat(-1, 1))]),
            ],
        )
        .unwrap();
        let gb = complete_groebner(&pres, &MonomialOrder::deglex(2), 6).unwrap();
        assert!(gb.is_complete(), "{:?}", gb);
        // Every rule's tail is normal and leads are pairwise non-divisible.
        for (i, r) in gb.rules().iter().enumerate() {
            assert_eq!(normal_form(&r.tail, &gb), r.tail);
            for (j, s) in gb.rules().iter().enumerate() {
                assert!(i == j || !r.lead.contains(&s.lead));
            }
        }
    }

    #[test]
    fn incomplete_at_small_bound_is_reported() {
        // xyx = yxy style braid relation never completes finitely under deglex.
        let pres = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![NcPolynomial::from_terms([
                (w(&[0, 1, 0]), rat(1, 1)),
                (w(&[1, 0, 1]), rat(-1, 1)),
            ])],
        )
        .unwrap();
        let gb = complete_groebner(&pres, &MonomialOrder::deglex(2), 5).unwrap();
        assert!(!gb.is_complete());
        assert_eq!(normal_words(&gb, 2), Err(NcError::IncompleteBasis));
    }

    #[test]
    fn degree_bound_below_relations_is_rejected() {
        let err = complete_groebner(&family_presentation(&rat(1, 1)), &MonomialOrder::deglex(2), 1);
        assert_eq!(err, Err(NcError::DegreeBoundTooSmall { bound: 1, degree: 2 }));
    }

    #[test]
    fn rule_display() {
        let gb = a1();
        let names = ["x".to_string(), "y".to_string()];
        assert_eq!(gb.rules()[0].tail.display(&names).to_string(), "yx + x");
    }
}
