use std::fmt;

/// One of the six faces, in the order used for move indices.
///
/// Opposite faces sit three apart (`U`/`D`, `F`/`B`, `R`/`L`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    U = 0,
    F = 1,
    R = 2,
    D = 3,
    B = 4,
    L = 5,
}

impl Face {
    pub const ALL: [Face; 6] = [Face::U, Face::F, Face::R, Face::D, Face::B, Face::L];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Face {
        Face::ALL[i]
    }

    pub fn opposite(self) -> Face {
        Face::ALL[(self as usize + 3) % 6]
    }

    pub fn letter(self) -> char {
        match self {
            Face::U => 'U',
            Face::F => 'F',
            Face::R => 'R',
            Face::D => 'D',
            Face::B => 'B',
            Face::L => 'L',
        }
    }

    pub fn from_letter(c: char) -> Option<Face> {
        Some(match c {
            'U' => Face::U,
            'F' => Face::F,
            'R' => Face::R,
            'D' => Face::D,
            'B' => Face::B,
            'L' => Face::L,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    Cw90 = 0,
    Half = 1,
    Ccw90 = 2,
}

impl Twist {
    pub const ALL: [Twist; 3] = [Twist::Cw90, Twist::Half, Twist::Ccw90];

    /// Number of clockwise quarter turns.
    pub fn quarter_turns(self) -> usize {
        self as usize + 1
    }

    pub fn inverse(self) -> Twist {
        match self {
            Twist::Cw90 => Twist::Ccw90,
            Twist::Half => Twist::Half,
            Twist::Ccw90 => Twist::Cw90,
        }
    }
}

/// A face turn. There are exactly 18 of them; `Move::index` is `3 * face + twist`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub face: Face,
    pub twist: Twist,
}

pub const N_MOVES: usize = 18;

impl Move {
    pub const fn new(face: Face, twist: Twist) -> Move {
        Move { face, twist }
    }

    pub fn all() -> impl Iterator<Item = Move> + Clone {
        (0..N_MOVES).map(Move::from_index)
    }

    pub fn index(self) -> usize {
        self.face as usize * 3 + self.twist as usize
    }

    pub fn from_index(i: usize) -> Move {
        Move {
            face: Face::from_index(i / 3),
            twist: Twist::ALL[i % 3],
        }
    }

    pub fn inverse(self) -> Move {
        Move {
            face: self.face,
            twist: self.twist.inverse(),
        }
    }

    /// Whether the move keeps the subgroup H invariant: any turn of U or D,
    /// and half turns of the four side faces.
    pub fn preserves_h(self) -> bool {
        matches!(self.face, Face::U | Face::D) || self.twist == Twist::Half
    }

    pub fn is_quarter(self) -> bool {
        self.twist != Twist::Half
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = match self.twist {
            Twist::Cw90 => "",
            Twist::Half => "2",
            Twist::Ccw90 => "'",
        };
        write!(f, "{}{}", self.face.letter(), suffix)
    }
}

/// The ten moves of A (those preserving H), in move-index order.
pub const A_MOVES: [usize; 10] = [0, 1, 2, 4, 7, 9, 10, 11, 13, 16];

/// Canonical-sequence rule: a move may follow `prev` unless it turns the same
/// face, or the opposite face when that face sorts first (U before D, F before B,
/// R before L).
#[inline]
pub fn may_follow(prev: Option<Move>, next: Move) -> bool {
    match prev {
        None => true,
        Some(p) => {
            let (pf, nf) = (p.face as usize, next.face as usize);
            pf != nf && pf != nf + 3
        }
    }
}

/// Same rule as [`may_follow`] on raw move indices; `prev == N_MOVES` means "no previous move".
#[inline]
pub fn may_follow_index(prev: usize, next: usize) -> bool {
    if prev >= N_MOVES {
        return true;
    }
    let (pf, nf) = (prev / 3, next / 3);
    pf != nf && pf != nf + 3
}
