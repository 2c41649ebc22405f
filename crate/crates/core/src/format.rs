//! Text formats for trees, Dyck paths, forests, interval-posets and flows.
//!
//! ```text
//! tree    T  := "." | "(" T T ")"
//! dyck       := { "U" | "D" }
//! forest  F  := T+            T := "(" T* ")"
//! poset      := n ":" [ a "->" b { "," a "->" b } ]
//! flow    F  := T+            T := "(" int T* ")"
//! pair       := tree [","] tree
//! ```
//!
//! Whitespace is ignored everywhere. Rendering is canonical, so
//! `parse(render(x)) == x`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::catalan::{BinaryTree, DyckError, DyckPath, ForestError, PlanarForest, Step, TreeError};
use crate::flows::{validate_flow, Flow, FlowError};
use crate::interval::{IntervalPoset, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeError),
    #[error("invalid Dyck path: {0}")]
    Dyck(#[from] DyckError),
    #[error("invalid forest: {0}")]
    Forest(#[from] ForestError),
    #[error("invalid interval-poset: {0}")]
    Poset(#[from] PosetError),
    #[error("invalid flow: {0}")]
    Flow(#[from] FlowError),
}

impl FormatError {
    /// Whether the text was syntactically malformed, as opposed to
    /// describing an invalid object.
    pub fn is_parse(&self) -> bool {
        matches!(self, FormatError::Parse(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Tree,
    Dyck,
    Forest,
    Poset,
    Flow,
    TreePair,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::Tree,
        Kind::Dyck,
        Kind::Forest,
        Kind::Poset,
        Kind::Flow,
        Kind::TreePair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Tree => "tree",
            Kind::Dyck => "dyck",
            Kind::Forest => "forest",
            Kind::Poset => "poset",
            Kind::Flow => "flow",
            Kind::TreePair => "tree-pair",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Tree(BinaryTree),
    Dyck(DyckPath),
    Forest(PlanarForest),
    Poset(IntervalPoset),
    Flow(Flow),
    TreePair(BinaryTree, BinaryTree),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Tree(_) => Kind::Tree,
            Object::Dyck(_) => Kind::Dyck,
            Object::Forest(_) => Kind::Forest,
            Object::Poset(_) => Kind::Poset,
            Object::Flow(_) => Kind::Flow,
            Object::TreePair(..) => Kind::TreePair,
        }
    }
}

pub fn parse_object(kind: Kind, text: &str) -> Result<Object, FormatError> {
    Ok(match kind {
        Kind::Tree => Object::Tree(text.parse()?),
        Kind::Dyck => Object::Dyck(text.parse()?),
        Kind::Forest => Object::Forest(text.parse()?),
        Kind::Poset => Object::Poset(text.parse()?),
        Kind::Flow => Object::Flow(text.parse()?),
        Kind::TreePair => {
            let (a, b) = parse_tree_pair(text)?;
            Object::TreePair(a, b)
        }
    })
}

pub fn render_object(o: &Object) -> String {
    match o {
        Object::Tree(t) => t.to_string(),
        Object::Dyck(d) => d.to_string(),
        Object::Forest(f) => f.to_string(),
        Object::Poset(p) => p.to_string(),
        Object::Flow(f) => f.to_string(),
        Object::TreePair(a, b) => format!("{a} {b}"),
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
    }

    /// Next non-whitespace character, not consumed.
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn expect_str(&mut self, want: &str) -> Result<(), ParseError> {
        for w in want.chars() {
            if self.chars.peek() != Some(&w) {
                return Err(self.error(format!("expected `{want}`")));
            }
            self.bump();
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing `{c}`"))),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.error("expected an integer");
        let mut s = String::new();
        if self.chars.peek() == Some(&'-') {
            s.push('-');
            self.bump();
        }
        while let Some(c) = self.chars.peek().copied().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        s.parse().map_err(|_| start)
    }

    fn tree(&mut self) -> Result<BinaryTree, ParseError> {
        match self.peek() {
            Some('.') => {
                self.bump();
                Ok(BinaryTree::Empty)
            }
            Some('(') => {
                self.bump();
                let l = self.tree()?;
                let r = self.tree()?;
                self.expect(')')?;
                Ok(BinaryTree::node(l, r))
            }
            Some(c) => Err(self.error(format!("expected `.` or `(`, found `{c}`"))),
            None => Err(self.error("expected a tree, found end of input")),
        }
    }

    /// One tree of a forest, pushing preorder parents (and inputs when
    /// `with_inputs`).
    fn planar_tree(
        &mut self,
        up: Option<usize>,
        parent: &mut Vec<Option<usize>>,
        inputs: &mut Vec<i64>,
        with_inputs: bool,
    ) -> Result<(), ParseError> {
        self.expect('(')?;
        parent.push(up);
        let me = parent.len();
        if with_inputs {
            inputs.push(self.integer()?);
        }
        while self.peek() == Some('(') {
            self.planar_tree(Some(me), parent, inputs, with_inputs)?;
        }
        self.expect(')')
    }

    fn planar_forest(
        &mut self,
        with_inputs: bool,
    ) -> Result<(Vec<Option<usize>>, Vec<i64>), ParseError> {
        let mut parent = Vec::new();
        let mut inputs = Vec::new();
        if self.peek().is_none() {
            return Err(self.error("expected a forest, found end of input"));
        }
        while self.peek().is_some() {
            self.planar_tree(None, &mut parent, &mut inputs, with_inputs)?;
        }
        Ok((parent, inputs))
    }
}

impl FromStr for BinaryTree {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        let t = c.tree()?;
        c.finish()?;
        Ok(t)
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

pub fn parse_tree_pair(s: &str) -> Result<(BinaryTree, BinaryTree), FormatError> {
    let mut c = Cursor::new(s);
    let a = c.tree()?;
    if c.peek() == Some(',') {
        c.bump();
    }
    let b = c.tree()?;
    c.finish()?;
    Ok((a, b))
}

impl FromStr for DyckPath {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        let mut steps = Vec::new();
        while let Some(ch) = c.peek() {
            steps.push(match ch {
                'U' => Step::Up,
                'D' => Step::Down,
                _ => return Err(c.error(format!("expected `U` or `D`, found `{ch}`")).into()),
            });
            c.bump();
        }
        Ok(DyckPath::new(steps)?)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for PlanarForest {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (parent, _) = Cursor::new(s).planar_forest(false)?;
        Ok(PlanarForest::from_parents(parent)?)
    }
}

fn write_subtree(
    f: &mut fmt::Formatter<'_>,
    forest: &PlanarForest,
    v: usize,
    inputs: Option<&[i64]>,
) -> fmt::Result {
    f.write_str("(")?;
    if let Some(inputs) = inputs {
        write!(f, "{}", inputs[v - 1])?;
    }
    for c in forest.children(v) {
        if inputs.is_some() {
            f.write_str(" ")?;
        }
        write_subtree(f, forest, c, inputs)?;
    }
    f.write_str(")")
}

impl fmt::Display for PlanarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.roots() {
            write_subtree(f, self, r, None)?;
        }
        Ok(())
    }
}

impl FromStr for Flow {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (parent, inputs) = Cursor::new(s).planar_forest(true)?;
        let forest = PlanarForest::from_parents(parent)?;
        Ok(validate_flow(forest, inputs)?)
    }
}

impl fmt::Display for Flow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.forest().roots().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write_subtree(f, self.forest(), r, Some(self.inputs()))?;
        }
        Ok(())
    }
}

impl FromStr for IntervalPoset {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        let n = c.integer()?;
        let n = usize::try_from(n).map_err(|_| c.error("size must be nonnegative"))?;
        c.expect(':')?;
        let mut relations = Vec::new();
        if c.peek().is_some() {
            loop {
                let a = vertex(&mut c)?;
                c.skip_ws();
                c.expect_str("->")?;
                let b = vertex(&mut c)?;
                relations.push((a, b));
                if c.peek() != Some(',') {
                    break;
                }
                c.bump();
            }
        }
        c.finish()?;
        Ok(IntervalPoset::validate(n, &relations)?)
    }
}

fn vertex(c: &mut Cursor<'_>) -> Result<usize, ParseError> {
    let v = c.integer()?;
    usize::try_from(v).map_err(|_| c.error("vertex labels are positive"))
}

impl fmt::Display for IntervalPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.size())?;
        let pairs: Vec<String> = self
            .dec_relations()
            .into_iter()
            .chain(self.inc_relations())
            .map(|(a, b)| format!("{a}->{b}"))
            .collect();
        if !pairs.is_empty() {
            write!(f, " {}", pairs.join(", "))?;
        }
        Ok(())
    }
}
