//! Expressions over diagram literals.
//!
//! ```text
//! expr    := term ("<=>" term)?
//! term    := factor ("*" factor)*
//! factor  := primary ("^-1")*
//! primary := "{" tree ";" middle ";" tree "}" | "(" term ")"
//! ```

use crate::cloning::CloningSystem;
use crate::error::{Result, WztError};
use crate::instances::AnyInstance;
use crate::syntax::Cursor;
use crate::with_instance;
use crate::wzt::{ordering_text, scan_diagram, RawDiagram, TreeDiagram, Wzt};

#[derive(Debug, Clone)]
enum Node<'a> {
    Literal(RawDiagram<'a>),
    Mul(Box<Node<'a>>, Box<Node<'a>>),
    Inv(Box<Node<'a>>),
}

#[derive(Debug, Clone)]
struct Parsed<'a> {
    lhs: Node<'a>,
    rhs: Option<Node<'a>>,
}

fn term<'a>(cur: &mut Cursor<'a>) -> Result<Node<'a>> {
    let mut acc = factor(cur)?;
    while cur.eat('*') {
        acc = Node::Mul(Box::new(acc), Box::new(factor(cur)?));
    }
    Ok(acc)
}

fn factor<'a>(cur: &mut Cursor<'a>) -> Result<Node<'a>> {
    let mut acc = primary(cur)?;
    while cur.eat_str("^-1") {
        acc = Node::Inv(Box::new(acc));
    }
    Ok(acc)
}

fn primary<'a>(cur: &mut Cursor<'a>) -> Result<Node<'a>> {
    match cur.peek() {
        Some('{') => Ok(Node::Literal(scan_diagram(cur)?)),
        Some('(') => {
            cur.bump();
            let inner = term(cur)?;
            cur.expect(')')?;
            Ok(inner)
        }
        _ => Err(cur.error("expected a diagram literal `{…}` or `(`")),
    }
}

fn parse(text: &str) -> Result<Parsed<'_>> {
    let mut cur = Cursor::new(text);
    let lhs = term(&mut cur)?;
    let rhs = if cur.eat_str("<=>") {
        Some(term(&mut cur)?)
    } else {
        None
    };
    cur.expect_end()?;
    Ok(Parsed { lhs, rhs })
}

fn literals<'n, 'a>(node: &'n Node<'a>, out: &mut Vec<&'n RawDiagram<'a>>) {
    match node {
        Node::Literal(raw) => out.push(raw),
        Node::Mul(a, b) => {
            literals(a, out);
            literals(b, out);
        }
        Node::Inv(a) => literals(a, out),
    }
}

/// Grammar family of an instance: braid middles serve both `bv` and `bf`.
fn family(inst: &AnyInstance) -> &'static str {
    match inst {
        AnyInstance::F(_) => "f",
        AnyInstance::V(_) => "v",
        AnyInstance::Bv(_) | AnyInstance::Bf(_) => "braid",
        AnyInstance::DirPow(_) => "dirpow",
    }
}

/// Picks the instance: the given one, else the one named by the first
/// literal whose middle is not `1`; every literal must agree with it.
fn resolve(parsed: &Parsed<'_>, given: Option<&AnyInstance>) -> Result<AnyInstance> {
    let mut raws = Vec::new();
    literals(&parsed.lhs, &mut raws);
    if let Some(rhs) = &parsed.rhs {
        literals(rhs, &mut raws);
    }
    let mut chosen = given.cloned();
    for raw in raws {
        if raw.middle.trim() == "1" {
            continue;
        }
        let Some(inferred) = AnyInstance::infer_from_middle(raw.middle) else {
            return Err(WztError::parse(
                raw.middle_pos,
                "unrecognized middle element",
            ));
        };
        match &chosen {
            None => chosen = Some(inferred),
            Some(c) if family(c) == family(&inferred) => {}
            Some(c) => {
                return Err(WztError::InstanceMismatch(format!(
                    "literal at {} is a {} element but the expression uses {}",
                    raw.middle_pos,
                    inferred.name(),
                    c.name()
                )))
            }
        }
    }
    Ok(chosen.unwrap_or(AnyInstance::F(crate::instances::ThompsonF)))
}

fn eval_node<S: CloningSystem>(w: &Wzt<S>, node: &Node<'_>) -> Result<TreeDiagram<S::Element>> {
    match node {
        Node::Literal(raw) => w.build(raw),
        Node::Mul(a, b) => w.multiply(&eval_node(w, a)?, &eval_node(w, b)?),
        Node::Inv(a) => Ok(w.invert(&eval_node(w, a)?)),
    }
}

/// What to print for a single (non-comparison) expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// The resulting diagram.
    Show,
    /// Its sign: `positive`, `zero` or `negative`.
    Sign,
    /// Its image in V.
    Project,
}

fn eval_with<S: CloningSystem>(w: &Wzt<S>, parsed: &Parsed<'_>, action: Action) -> Result<String> {
    let lhs = eval_node(w, &parsed.lhs)?;
    match &parsed.rhs {
        None => match action {
            Action::Show => Ok(w.format(&lhs)),
            Action::Sign => Ok(w.sign(&lhs)?.to_string()),
            Action::Project => Ok(Wzt::v().format(&w.project(&lhs))),
        },
        Some(rhs) if action == Action::Show => {
            let rhs = eval_node(w, rhs)?;
            Ok(ordering_text(w.compare(&lhs, &rhs)?).to_string())
        }
        Some(_) => Err(WztError::parse(
            0,
            "a comparison cannot be signed or projected",
        )),
    }
}

/// Evaluates an expression: a product prints as a diagram literal, a
/// comparison as `less`, `equal` or `greater`.
pub fn eval_expression(text: &str, instance: Option<&AnyInstance>) -> Result<String> {
    eval_expression_as(text, instance, Action::Show)
}

pub fn eval_expression_as(
    text: &str,
    instance: Option<&AnyInstance>,
    action: Action,
) -> Result<String> {
    let parsed = parse(text)?;
    let inst = resolve(&parsed, instance)?;
    with_instance!(inst, sys => eval_with(&Wzt::new(sys), &parsed, action))
}
