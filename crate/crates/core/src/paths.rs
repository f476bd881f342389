//! Lattice paths: Dyck, Motzkin, their "super" variants (allowed below the
//! x-axis), and double-Dyck paths, with exhaustive streaming enumeration and
//! the hump statistic.
//!
//! Enumeration is lexicographic with `Up < Flat < Down` and never
//! materializes a family in memory; at the default caps the largest family
//! holds a few million paths and streams in seconds.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::combinat::Nat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathsError {
    #[error("humps are not defined for {family} paths; only their counts are used")]
    HumpsUndefined { family: FamilyKind },
    #[error(
        "enumeration cap exceeded for {family}: n = {n} > cap {cap}; \
         raise the cap or use the closed-form routes"
    )]
    CapExceeded { family: FamilyKind, n: usize, cap: usize },
    #[error("cannot split an empty path at its first return")]
    EmptySplit,
    #[error("first-return split is not defined for {family} paths")]
    SplitUndefined { family: FamilyKind },
    #[error("invalid {family} path: {reason}")]
    InvalidPath { family: FamilyKind, reason: String },
    #[error("invalid step character {0:?}, expected one of U, F, D")]
    BadStepChar(char),
    #[error("unknown path family {0:?}")]
    UnknownFamily(String),
}

/// A single step. The declaration order is the lexicographic order used by
/// the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Flat,
    Down,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Flat => 0,
            Step::Down => -1,
        }
    }

    fn glyph(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Flat => 'F',
            Step::Down => 'D',
        }
    }

    fn from_char(c: char) -> Result<Self, PathsError> {
        match c {
            'U' => Ok(Step::Up),
            'F' => Ok(Step::Flat),
            'D' => Ok(Step::Down),
            other => Err(PathsError::BadStepChar(other)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Dyck,
    Motzkin,
    SuperDyck,
    SuperMotzkin,
    DoubleDyck,
}

impl FamilyKind {
    pub fn allows_flat(self) -> bool {
        matches!(self, FamilyKind::Motzkin | FamilyKind::SuperMotzkin)
    }

    pub fn allows_negative(self) -> bool {
        matches!(self, FamilyKind::SuperDyck | FamilyKind::SuperMotzkin)
    }

    /// Humps are defined for Dyck, Motzkin and double-Dyck paths; the super
    /// families enter only through their counts.
    pub fn supports_humps(self) -> bool {
        !self.allows_negative()
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyKind::Dyck => "dyck",
            FamilyKind::Motzkin => "motzkin",
            FamilyKind::SuperDyck => "super-dyck",
            FamilyKind::SuperMotzkin => "super-motzkin",
            FamilyKind::DoubleDyck => "double-dyck",
        };
        f.write_str(name)
    }
}

impl FromStr for FamilyKind {
    type Err = PathsError;

    fn from_str(s: &str) -> Result<Self, PathsError> {
        match s.to_ascii_lowercase().as_str() {
            "dyck" => Ok(FamilyKind::Dyck),
            "motzkin" => Ok(FamilyKind::Motzkin),
            "super-dyck" | "superdyck" => Ok(FamilyKind::SuperDyck),
            "super-motzkin" | "supermotzkin" => Ok(FamilyKind::SuperMotzkin),
            "double-dyck" | "doubledyck" => Ok(FamilyKind::DoubleDyck),
            other => Err(PathsError::UnknownFamily(other.to_string())),
        }
    }
}

/// A path family together with its size parameter: Dyck and super Dyck paths
/// of size n have length 2n, Motzkin-alphabet paths have length n, and
/// double-Dyck paths have length 2(n+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathFamily {
    pub kind: FamilyKind,
    pub n: usize,
}

impl PathFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        Self { kind, n }
    }

    pub fn dyck(n: usize) -> Self {
        Self::new(FamilyKind::Dyck, n)
    }

    pub fn motzkin(n: usize) -> Self {
        Self::new(FamilyKind::Motzkin, n)
    }

    pub fn super_dyck(n: usize) -> Self {
        Self::new(FamilyKind::SuperDyck, n)
    }

    pub fn super_motzkin(n: usize) -> Self {
        Self::new(FamilyKind::SuperMotzkin, n)
    }

    pub fn double_dyck(n: usize) -> Self {
        Self::new(FamilyKind::DoubleDyck, n)
    }

    pub fn path_len(self) -> usize {
        match self.kind {
            FamilyKind::Dyck | FamilyKind::SuperDyck => 2 * self.n,
            FamilyKind::Motzkin | FamilyKind::SuperMotzkin => self.n,
            FamilyKind::DoubleDyck => 2 * (self.n + 1),
        }
    }

    /// For double-Dyck paths, the x-coordinate that must sit on the axis.
    pub fn midpoint(self) -> Option<usize> {
        match self.kind {
            FamilyKind::DoubleDyck => Some(2 * self.n.div_ceil(2)),
            _ => None,
        }
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind, self.n)
    }
}

/// An immutable lattice path tagged with its family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
    family: PathFamily,
}

impl LatticePath {
    /// Validates the family invariants: length, allowed alphabet, return to
    /// the axis, nonnegativity for non-super families, and the double-Dyck
    /// midpoint.
    pub fn new(steps: Vec<Step>, family: PathFamily) -> Result<Self, PathsError> {
        let fail = |reason: String| PathsError::InvalidPath { family: family.kind, reason };
        if steps.len() != family.path_len() {
            return Err(fail(format!(
                "length {} does not match the family length {}",
                steps.len(),
                family.path_len()
            )));
        }
        if !family.kind.allows_flat() && steps.contains(&Step::Flat) {
            return Err(fail("flat steps are not allowed in this family".into()));
        }
        let midpoint = family.midpoint();
        let mut height = 0i64;
        for (i, step) in steps.iter().enumerate() {
            height += step.delta();
            if height < 0 && !family.kind.allows_negative() {
                return Err(fail(format!("drops below the axis after step {}", i + 1)));
            }
            if midpoint == Some(i + 1) && height != 0 {
                return Err(fail(format!("does not touch the axis at x = {}", i + 1)));
            }
        }
        if height != 0 {
            return Err(fail(format!("ends at height {height}, not on the axis")));
        }
        Ok(Self { steps, family })
    }

    fn from_steps_unchecked(steps: Vec<Step>, family: PathFamily) -> Self {
        Self { steps, family }
    }

    /// Parses a string over U/F/D as a path of the given family.
    pub fn parse(s: &str, family: PathFamily) -> Result<Self, PathsError> {
        let steps = s.chars().map(Step::from_char).collect::<Result<Vec<_>, _>>()?;
        Self::new(steps, family)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn family(&self) -> PathFamily {
        self.family
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of humps: an up-step followed by zero or more flat steps
    /// followed by a down-step. On flat-free families this is the number of
    /// peaks. Not defined for the super families.
    pub fn hump_count(&self) -> Result<usize, PathsError> {
        if !self.family.kind.supports_humps() {
            return Err(PathsError::HumpsUndefined { family: self.family.kind });
        }
        let steps = &self.steps;
        let mut count = 0;
        for (i, &step) in steps.iter().enumerate() {
            if step == Step::Up {
                let mut j = i + 1;
                while j < steps.len() && steps[j] == Step::Flat {
                    j += 1;
                }
                if j < steps.len() && steps[j] == Step::Down {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Splits at the first return to the x-axis. The concatenation of the two
    /// parts reconstructs the path, and humps add across the split point.
    /// Parts of a double-Dyck path are plain Dyck paths.
    pub fn first_return_split(&self) -> Result<(LatticePath, LatticePath), PathsError> {
        if self.family.kind.allows_negative() {
            return Err(PathsError::SplitUndefined { family: self.family.kind });
        }
        if self.steps.is_empty() {
            return Err(PathsError::EmptySplit);
        }
        let mut height = 0i64;
        let mut split = self.steps.len();
        for (i, step) in self.steps.iter().enumerate() {
            height += step.delta();
            if height == 0 {
                split = i + 1;
                break;
            }
        }
        let part_kind = match self.family.kind {
            FamilyKind::Motzkin => FamilyKind::Motzkin,
            _ => FamilyKind::Dyck,
        };
        let size = |len: usize| match part_kind {
            FamilyKind::Motzkin => len,
            _ => len / 2,
        };
        let prefix = LatticePath::from_steps_unchecked(
            self.steps[..split].to_vec(),
            PathFamily::new(part_kind, size(split)),
        );
        let suffix = LatticePath::from_steps_unchecked(
            self.steps[split..].to_vec(),
            PathFamily::new(part_kind, size(self.steps.len() - split)),
        );
        Ok((prefix, suffix))
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.glyph())?;
        }
        Ok(())
    }
}

/// Per-family caps on exhaustive enumeration in [`total_humps`]. These bound
/// CI runtime; deeper offline runs can raise them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    pub dyck: usize,
    pub motzkin: usize,
    pub super_dyck: usize,
    pub super_motzkin: usize,
    pub double_dyck: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        Self {
            dyck: 14,
            motzkin: 16,
            super_dyck: 12,
            super_motzkin: 12,
            double_dyck: 12,
        }
    }
}

impl EnumCaps {
    /// The same cap for every family.
    pub fn uniform(cap: usize) -> Self {
        Self {
            dyck: cap,
            motzkin: cap,
            super_dyck: cap,
            super_motzkin: cap,
            double_dyck: cap,
        }
    }

    pub fn cap_for(&self, kind: FamilyKind) -> usize {
        match kind {
            FamilyKind::Dyck => self.dyck,
            FamilyKind::Motzkin => self.motzkin,
            FamilyKind::SuperDyck => self.super_dyck,
            FamilyKind::SuperMotzkin => self.super_motzkin,
            FamilyKind::DoubleDyck => self.double_dyck,
        }
    }
}

/// Streams every path of the family exactly once, in lexicographic order
/// with `Up < Flat < Down`.
pub fn enumerate(family: PathFamily) -> PathStream {
    let inner = match family.kind {
        FamilyKind::DoubleDyck => {
            let left = family.n.div_ceil(2);
            let right = family.n / 2 + 1;
            StreamImpl::Double(DoubleDyckWalk::new(left, right))
        }
        kind => StreamImpl::Walk(Walk::new(
            family.path_len(),
            kind.allows_flat(),
            kind.allows_negative(),
        )),
    };
    PathStream { family, inner }
}

pub struct PathStream {
    family: PathFamily,
    inner: StreamImpl,
}

enum StreamImpl {
    Walk(Walk),
    Double(DoubleDyckWalk),
}

impl Iterator for PathStream {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let steps = match &mut self.inner {
            StreamImpl::Walk(w) => w.next_steps()?,
            StreamImpl::Double(d) => d.next_steps()?,
        };
        Some(LatticePath::from_steps_unchecked(steps, self.family))
    }
}

/// Backtracking generator over fixed-length step words that end on the axis,
/// with optional flat steps and optional excursions below the axis.
struct Walk {
    len: usize,
    allow_flat: bool,
    allow_negative: bool,
    steps: Vec<Step>,
    height: i64,
    state: WalkState,
}

#[derive(PartialEq)]
enum WalkState {
    Start,
    Mid,
    Done,
}

impl Walk {
    fn new(len: usize, allow_flat: bool, allow_negative: bool) -> Self {
        Self {
            len,
            allow_flat,
            allow_negative,
            steps: Vec::with_capacity(len),
            height: 0,
            state: WalkState::Start,
        }
    }

    /// Exact completability test: can a word with this step appended still
    /// reach height 0 at position `len`?
    fn feasible(&self, step: Step) -> bool {
        if step == Step::Flat && !self.allow_flat {
            return false;
        }
        let height = self.height + step.delta();
        if height < 0 && !self.allow_negative {
            return false;
        }
        let remaining = (self.len - self.steps.len() - 1) as i64;
        if height.abs() > remaining {
            return false;
        }
        // Without flat steps the height parity is forced.
        self.allow_flat || (remaining - height.abs()) % 2 == 0
    }

    fn push(&mut self, step: Step) {
        self.steps.push(step);
        self.height += step.delta();
    }

    fn descend(&mut self) -> bool {
        while self.steps.len() < self.len {
            let Some(step) = [Step::Up, Step::Flat, Step::Down]
                .into_iter()
                .find(|&s| self.feasible(s))
            else {
                return false;
            };
            self.push(step);
        }
        true
    }

    fn advance(&mut self) -> bool {
        while let Some(last) = self.steps.pop() {
            self.height -= last.delta();
            let successors: &[Step] = match last {
                Step::Up => &[Step::Flat, Step::Down],
                Step::Flat => &[Step::Down],
                Step::Down => &[],
            };
            if let Some(&step) = successors.iter().find(|&&s| self.feasible(s)) {
                self.push(step);
                // feasible() is exact, so the descent always completes.
                let completed = self.descend();
                debug_assert!(completed);
                return true;
            }
        }
        false
    }

    fn next_steps(&mut self) -> Option<Vec<Step>> {
        let found = match self.state {
            WalkState::Start => {
                self.state = WalkState::Mid;
                self.descend()
            }
            WalkState::Mid => self.advance(),
            WalkState::Done => false,
        };
        if found {
            Some(self.steps.clone())
        } else {
            self.state = WalkState::Done;
            None
        }
    }
}

/// Product of two Dyck walks: every double-Dyck path is the concatenation of
/// a Dyck path of the floor half-length and one of the ceiling half-length.
/// Lexicographic order on the pair is lexicographic order on the word.
struct DoubleDyckWalk {
    left: Walk,
    right_n: usize,
    current_left: Option<Vec<Step>>,
    right: Walk,
}

impl DoubleDyckWalk {
    fn new(left_n: usize, right_n: usize) -> Self {
        Self {
            left: Walk::new(2 * left_n, false, false),
            right_n,
            current_left: None,
            right: Walk::new(2 * right_n, false, false),
        }
    }

    fn next_steps(&mut self) -> Option<Vec<Step>> {
        loop {
            if self.current_left.is_none() {
                self.current_left = Some(self.left.next_steps()?);
                self.right = Walk::new(2 * self.right_n, false, false);
            }
            match self.right.next_steps() {
                Some(right) => {
                    let mut steps = self.current_left.clone().unwrap();
                    steps.extend(right);
                    return Some(steps);
                }
                None => self.current_left = None,
            }
        }
    }
}

/// Sum of [`LatticePath::hump_count`] over the whole family, by streaming
/// enumeration. Refuses super families (no hump definition) and sizes above
/// the cap, pointing callers at the closed forms instead.
pub fn total_humps(family: PathFamily, caps: &EnumCaps) -> Result<Nat, PathsError> {
    if !family.kind.supports_humps() {
        return Err(PathsError::HumpsUndefined { family: family.kind });
    }
    let cap = caps.cap_for(family.kind);
    if family.n > cap {
        return Err(PathsError::CapExceeded { family: family.kind, n: family.n, cap });
    }
    let mut total = Nat::from(0u32);
    for path in enumerate(family) {
        total += path.hump_count()? as u64;
    }
    Ok(total)
}
