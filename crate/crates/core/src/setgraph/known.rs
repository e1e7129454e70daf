//! Published set bounds, by representative.

/// Sets with distance exactly 18.
pub const EIGHTEEN: [&str; 21] = [
    "",
    "R' B2 U B2 U' R",
    "R' D L2 D' R",
    "R' U' R2 F2 R' F2 U R'",
    "B' U' R2 U R2 B'",
    "F' R2 U R2 U' F' R2 U'",
    "F' D F R2 U' F U2 F'",
    "F' D' B R2 B D F",
    "B' L2 R2 F' D2 U2 F' U",
    "B' U' F2 U B' U'",
    "F' D' B R2 B D F'",
    "B' D' L2 D L2 B' R2",
    "R' F2 U2 R F2 R2 U2 R'",
    "R' D L2 D' R U'",
    "B' U F2 U2 F2 U B'",
    "L' D' U' L' D U L' U'",
    "F' U F U F' U2 F'",
    "F' D U F' D' U' F' U'",
    "B' D U B' D' U' B'",
    "F' D' F' R2 B' D' B'",
    "B' D2 R2 U2 L2 F",
];

/// A pair of the distance-18 sets claimed to bound every set within 10 moves
/// of some orientation of one of them.
pub const PAIR: [&str; 2] = ["B' U F2 U2 F2 U B'", "B' U' R2 U R2 B'"];

/// Further sets with upper bounds, which together with the 18s bring every
/// needed vertex to 27.
pub const EXTRA: [(u8, &str); 4] = [
    (20, "R' B2 U' L' F' D2 R2 D' L B' U'"),
    (20, "R' D2 B' L' U L F' R' F2 D' B"),
    (19, "F' L' D F' U' R' B2 R'"),
    (19, "L' B F' D U' B' R F2 L' F' U'"),
];
