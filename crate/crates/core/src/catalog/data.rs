//! Table data. Cells are `coefficient*label` with an optional leading `-`;
//! coefficients use the scalar expression syntax.

pub const HOM_ASSOC_3D: &[(&str, &str, &str)] = &[
    ("e1", "e1", "a*e1"),
    ("e1", "e2", "a*e2"),
    ("e2", "e1", "a*e2"),
    ("e1", "e3", "b*e3"),
    ("e3", "e1", "b*e3"),
    ("e2", "e2", "a*e2"),
    ("e2", "e3", "b*e3"),
];

pub const HOM_JORDAN_3D: &[(&str, &str, &str)] = &[
    ("e1", "e1", "a*e1"),
    ("e1", "e2", "a*e2"),
    ("e2", "e1", "a*e2"),
    ("e1", "e3", "b*e3"),
    ("e3", "e1", "b*e3"),
    ("e2", "e2", "a*e2"),
    ("e2", "e3", "1/2*b*e3"),
    // printed as 0; commutativity forces the value of (e2, e3)
    ("e3", "e2", "1/2*b*e3"),
];

pub const DIAG_3D: [&str; 3] = ["a", "a", "b"];

pub const ALT4_MU1: &[(&str, &str, &str)] = &[
    ("e0", "e0", "e0"),
    ("e0", "e1", "e1"),
    ("e2", "e0", "e2"),
    ("e2", "e3", "e1"),
    ("e3", "e0", "e3"),
    ("e3", "e2", "-e1"),
];

pub const ALT4_MU2: &[(&str, &str, &str)] = &[
    ("e0", "e0", "e0"),
    ("e0", "e2", "e2"),
    ("e0", "e3", "e3"),
    ("e1", "e0", "e1"),
    ("e2", "e3", "e1"),
    ("e3", "e2", "-e1"),
];

/// Images of `e0 … e3` as sums of cells.
pub const ALPHA1: [&str; 4] = [
    "e0 + a1*e1 + a2*e2 + a3*e3",
    "0",
    "a4*e2 + a4*a3/a2*e3",
    "a5*e2 + a5*a3/a2*e3",
];

pub const ALPHA2: [&str; 4] = [
    "e0 + a1*e1 + a2*e2 + a3*e3",
    "a4*e1",
    "-a4*a2/a5*e2 - a4*a3/a5*e3",
    "a5*e1 + a6*e2 + (a6*a3 - a5)/a2*e3",
];

pub const MU1_ALPHA1: &[(&str, &str, &str)] = &[
    ("e0", "e0", "e0 + a1*e1 + a2*e2 + a3*e3"),
    ("e2", "e0", "a4*e2 + a4*a3/a2*e3"),
    ("e3", "e0", "a5*e2 + a5*a3/a2*e3"),
];

pub const MU2_ALPHA1: &[(&str, &str, &str)] = &[
    ("e0", "e0", "e0 + a1*e1 + a2*e2 + a3*e3"),
    ("e0", "e2", "a4*e2 + a4*a3/a2*e3"),
    ("e0", "e3", "a5*e2 + a5*a3/a2*e3"),
];

pub const MU1_ALPHA2: &[(&str, &str, &str)] = &[
    ("e0", "e0", "e0 + a1*e1 + a2*e2 + a3*e3"),
    ("e0", "e1", "a4*e1"),
    ("e2", "e0", "-a4*a2/a5*e2 - a4*a3/a5*e3"),
    ("e2", "e3", "a4*e1"),
    // printed as e3, which is not alpha2(e3)
    ("e3", "e0", "a5*e1 + a6*e2 + (a6*a3 - a5)/a2*e3"),
    ("e3", "e2", "-a4*e1"),
];

pub const MU2_ALPHA2: &[(&str, &str, &str)] = &[
    ("e0", "e0", "e0 + a1*e1 + a2*e2 + a3*e3"),
    ("e0", "e2", "-a4*a2/a5*e2 - a4*a3/a5*e3"),
    ("e0", "e3", "a5*e1 + a6*e2 + (a6*a3 - a5)/a2*e3"),
    ("e1", "e0", "a4*e1"),
    ("e2", "e3", "a4*e1"),
    ("e3", "e2", "-a4*e1"),
];

pub const OCTONION_BASIS: [&str; 8] = ["u", "e1", "e2", "e3", "e4", "e5", "e6", "e7"];

/// Row `i`, column `j` is `b_i b_j`.
pub const OCTONIONS: [[&str; 8]; 8] = [
    ["u", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
    ["e1", "-u", "e4", "e7", "-e2", "e6", "-e5", "-e3"],
    ["e2", "-e4", "-u", "e5", "e1", "-e3", "e7", "-e6"],
    ["e3", "-e7", "-e5", "-u", "e6", "e2", "-e4", "e1"],
    ["e4", "e2", "-e1", "-e6", "-u", "e7", "e3", "-e5"],
    ["e5", "-e6", "e3", "-e2", "-e7", "-u", "e1", "e4"],
    ["e6", "e5", "-e7", "e4", "-e3", "-e1", "-u", "e2"],
    ["e7", "e3", "e6", "-e1", "e5", "-e4", "-e2", "-u"],
];

pub const OCT_DIAG: [&str; 8] = ["1", "a", "b", "c", "a*b", "b*c", "a*b*c", "a*c"];

pub const OCTONIONS_TWIST_DIAG: [[&str; 8]; 8] = [
    [
        "u", "a*e1", "b*e2", "c*e3", "a*b*e4", "b*c*e5", "a*b*c*e6", "a*c*e7",
    ],
    [
        "a*e1", "-u", "a*b*e4", "a*c*e7", "-b*e2", "a*b*c*e6", "-b*c*e5", "-c*e3",
    ],
    [
        "b*e2",
        "-a*b*e4",
        "-u",
        "b*c*e5",
        "a*e1",
        "-c*e3",
        "a*c*e7",
        "-a*b*c*e6",
    ],
    [
        "c*e3", "-a*c*e7", "-b*c*e5", "-u", "a*b*c*e6", "b*e2", "-a*b*e4", "a*e1",
    ],
    [
        "a*b*e4",
        "b*e2",
        "-a*e1",
        "-a*b*c*e6",
        "-u",
        "a*c*e7",
        "c*e3",
        "-b*c*e5",
    ],
    [
        "b*c*e5",
        "-a*b*c*e6",
        "c*e3",
        "-b*e2",
        "-a*c*e7",
        "-u",
        "a*e1",
        "a*b*e4",
    ],
    [
        "a*b*c*e6", "b*c*e5", "-a*c*e7", "a*b*e4", "-c*e3", "-a*e1", "-u", "b*e2",
    ],
    [
        "a*c*e7", "c*e3", "a*b*c*e6", "-a*e1", "b*c*e5", "-a*b*e4", "-b*e2", "-u",
    ],
];
