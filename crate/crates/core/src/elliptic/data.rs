//! Fibration data for `k = 6..=18`: the coefficients of
//! `z1^2 = 4 y1^3 + a1 y1^2 + a2 y1 + a3`, the expected singular fibers, the
//! known sections and the birational maps to the anticanonical surfaces.
//!
//! Formulas use `x` for the base coordinate `x1` and `l1..l5` for λ.

use super::kodaira::KodairaType;

pub(super) struct FibrationRow {
    pub arity: usize,
    pub a: [&'static str; 3],
    /// Reducible fibers in the listed order, followed by the `I_1` count.
    pub reducible: &'static [KodairaType],
    pub nodal: usize,
    /// Sections other than `O`, as `(name, y1, z1)`.
    pub sections: &'static [(&'static str, &'static str, &'static str)],
    /// `(X, Y, Z)` in terms of `x1, y1, z1`.
    pub map: [&'static str; 3],
}

use KodairaType::{IStar, IVStar, I};

const OP: (&str, &str, &str) = ("O'", "0", "0");

pub(super) fn row(k: u8) -> Option<FibrationRow> {
    Some(match k {
        6 => FibrationRow {
            arity: 3,
            a: ["l2^2+2*l2*x*(1+x)+x^2*(-4*l1-4*l3+(1+x)^2)", "4*l1*l3*x^4", "0"],
            reducible: &[I(8), I(8)],
            nodal: 8,
            sections: &[OP, ("Q", "l1*x^2", "l1*x^2*(l2+x+x^2)")],
            map: [
                "2*y1*(-l3*x1^2+y1)/(x1*(l2*y1+x1*y1+x1^2*y1+z1))",
                "x1",
                "-(l2*y1+x1*y1+x1^2*y1+z1)/(2*x1*(-l3*x1^2+y1))",
            ],
        },
        7 => FibrationRow {
            arity: 3,
            a: ["x*(-4*l2+x*(-4*l1+(1+x)^2))", "-2*l3*x^4*(1+x)", "l3^2*x^6"],
            reducible: &[IStar(3), I(8)],
            nodal: 7,
            sections: &[("Q", "0", "l3*x^3")],
            map: ["2*y1^2/(x1*(-l3*x1^3+x1*y1+x1^2*y1-z1))", "x1", "-(-l3*x1^3+x1*y1+x1^2*y1-z1)/(2*x1*y1)"],
        },
        8 => FibrationRow {
            arity: 3,
            a: ["x*(x*(1+x)^2-4*l1*(l2+x))", "-2*l3*x^3*(1+x)*(l2+x)", "l3^2*x^4*(l2+x)^2"],
            reducible: &[IStar(1), I(3), I(8)],
            nodal: 6,
            sections: &[("Q", "0", "l3*x^2*(l2+x)")],
            map: [
                "2*y1^2/(x1*(-l2*l3*x1^2-l3*x1^3+x1*y1+x1^2*y1+z1))",
                "x1",
                "(l2*l3*x1^2+l3*x1^3-x1*y1-x1^2*y1-z1)/(2*(l2+x1)*y1)",
            ],
        },
        9 => FibrationRow {
            arity: 3,
            a: ["l2^2+2*l2*x*(1+x)+x*(-4*l3+x*(-4*l1+(1+x)^2))", "4*l1*l3*x^3", "0"],
            reducible: &[I(6), I(10)],
            nodal: 8,
            sections: &[OP, ("Q", "l1*x^2", "l1*x^2*(l2+x+x^2)")],
            map: ["2*y1*(-l3*x1+y1)/(x1*(l2*y1+x1*y1+x1^2*y1-z1))", "x1", "(l2*y1+x1*y1+x1^2*y1-z1)/(2*x1*(l3*x1-y1))"],
        },
        10 => FibrationRow {
            arity: 3,
            a: ["l1^2+2*l1*x*(1+x)+x*(-4*l2+x*(1+x)^2)", "-2*l3*x^2*(l1+x+x^2)", "l3^2*x^4"],
            reducible: &[I(5), I(11)],
            nodal: 8,
            sections: &[("Q", "0", "l3*x^2")],
            map: [
                "2*y1^2/(x1*(-l3*x1^2+l1*y1+x1*y1+x1^2*y1+z1))",
                "-(-l3*x1^2+l1*y1+x1*y1+x1^2*y1+z1)/(2*x1*y1)",
                "x1",
            ],
        },
        11 => FibrationRow {
            arity: 3,
            a: ["x^2*(1-4*l1+(2-4*l2)*x+x^2)", "-2*l3*x^3*(1+x)", "l3^2*x^4"],
            reducible: &[IVStar, I(9)],
            nodal: 7,
            sections: &[("Q", "0", "l3*x^2")],
            map: ["2*y1^2/(x1*(-l3*x1^2+x1*y1+x1^2*y1+z1))", "x1", "-(-l3*x1^2+x1*y1+x1^2*y1+z1)/(2*x1*y1)"],
        },
        12 => FibrationRow {
            arity: 3,
            a: ["(l1+x+x^2)^2", "-2*l3*x^2*(l2+x)*(l1+x+x^2)", "l3^2*x^4*(l2+x)^2"],
            reducible: &[I(6), I(3), I(9)],
            nodal: 6,
            sections: &[("Q", "0", "l3*x^2*(l2+x)")],
            map: [
                "2*y1^2/(x1*(-l2*l3*x1^2-l3*x1^3+l1*y1+x1*y1+x1^2*y1+z1))",
                "(l2*l3*x1^2+l3*x1^3-l1*y1-x1*y1-x1^2*y1-z1)/(2*(l2+x1)*y1)",
                "x1",
            ],
        },
        13 => FibrationRow {
            arity: 4,
            a: ["l2^2+2*l2*x*(1+x)+x*(-4*l4+x*(-4*l1-4*l3+(1+x)^2))", "4*l1*x^3*(l4+l3*x)", "0"],
            reducible: &[I(6), I(2), I(8)],
            nodal: 8,
            sections: &[OP, ("Q", "x*(l4+l3*x)", "x*(l4+l3*x)*(l2+x+x^2)")],
            map: [
                "2*y1*(-l4*x1-l3*x1^2+y1)/(x1*(l2*y1+x1*y1+x1^2*y1-z1))",
                "x1",
                "(l2*y1+x1*y1+x1^2*y1-z1)/(2*x1*(l4*x1+l3*x1^2-y1))",
            ],
        },
        14 => FibrationRow {
            arity: 4,
            a: ["l2^2+2*l2*x*(1+x)+x*(-4*l4+x*(-4*l3+(1+x)^2))", "-2*l1*x^3*(l2+x+x^2)", "l1^2*x^6"],
            reducible: &[I(7), I(8)],
            nodal: 9,
            sections: &[("Q", "0", "l1*x^3")],
            map: [
                "2*(l4*x1+l3*x1^2-y1)*y1/(x1*(l1*x1^3-l2*y1-x1*y1-x1^2*y1-z1))",
                "x1",
                "-(l1*x1^3-l2*y1-x1*y1-x1^2*y1-z1)/(2*x1*(l4*x1+l3*x1^2-y1))",
            ],
        },
        15 => FibrationRow {
            arity: 4,
            a: [
                "l2^2+2*l2*x*(1+x)+x*(-4*l4+x*(-4*l3+(1+x)^2))",
                "-2*l1*x^2*(l4+l3*x)*(l2+x+x^2)",
                "l1^2*x^4*(l4+l3*x)^2",
            ],
            reducible: &[I(5), I(3), I(8)],
            nodal: 8,
            sections: &[("Q", "0", "l1*x^2*(l4+l3*x)")],
            map: [
                "(l4+l3*x1)*(-l1*l4*x1^2-l1*l3*x1^3+l2*y1+x1*y1+x1^2*y1+z1)/(2*y1*(-l4*x1-l3*x1^2+y1))",
                "x1",
                "-(-l1*l4*x1^2-l1*l3*x1^3+l2*y1+x1*y1+x1^2*y1+z1)/(2*x1*(-l4*x1-l3*x1^2+y1))",
            ],
        },
        16 => FibrationRow {
            arity: 4,
            a: ["l2^2+2*l2*x*(1+x)+x*(-4*l4+x*(-4*l3+(1+x)^2))", "-2*l1*x^2*(l2+x+x^2)", "l1^2*x^4"],
            reducible: &[I(5), I(10)],
            nodal: 9,
            sections: &[("Q", "0", "l1*x^2")],
            map: [
                "2*y1*(-l4*x1-l3*x1^2+y1)/(x1*(-l1*x1^2+l2*y1+x1*y1+x1^2*y1+z1))",
                "x1",
                "(-l1*x1^2+l2*y1+x1*y1+x1^2*y1+z1)/(2*x1*(l4*x1+l3*x1^2-y1))",
            ],
        },
        17 => FibrationRow {
            arity: 5,
            a: [
                "l3^2+2*l3*x*(1+x)+x*(-4*l2*(l4+x)+x*(1-4*l1-4*l4*l5+2*x-4*l5*x+x^2))",
                "4*l1*x^3*(l4+x)*(l2+l5*x)",
                "0",
            ],
            reducible: &[I(6), I(2), I(2), I(6)],
            nodal: 8,
            sections: &[OP, ("Q", "x*(l2+l5*x)*(l4+x)", "x*(l2+l5*x)*(l4+x)*(l3+x+x^2)")],
            map: [
                "2*y1*(-l2*l4*x1-l2*x1^2-l4*l5*x1^2-l5*x1^3+y1)/((l4+x1)*(l3*y1+x1*y1+x1^2*y1+z1))",
                "x1",
                "(l3*y1+x1*y1+x1^2*y1+z1)/(2*x1*(l2*l4*x1+l2*x1^2+l4*l5*x1^2+l5*x1^3-y1))",
            ],
        },
        18 => FibrationRow {
            arity: 5,
            a: [
                "l2^2+2*l2*x*(1+x)+x*(-4*l3*(l5+x)+x*((1+x)^2-4*l4*(l5+x)))",
                "-2*l1*x^3*(l5+x)*(l2+x+x^2)",
                "l1^2*x^6*(l5+x)^2",
            ],
            reducible: &[I(7), I(3), I(5)],
            nodal: 9,
            sections: &[("Q", "0", "l1*x^3*(l5+x)")],
            map: ["x1", "(l1*l5*x1^3+l1*x1^4-l2*y1-x1*y1-x1^2*y1+z1)/(2*(l5+x1)*y1)", "-l1*x1^2*(l5+x1)/y1"],
        },
        _ => return None,
    })
}
