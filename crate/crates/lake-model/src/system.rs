use schemes::SystemRhs;

use crate::input::InputModel;
use crate::params::LakeParams;

/// Right-hand side of the three-lake system:
///
/// ```text
/// Q1 = (f13/v3) L3 + c(s) - ((f31+f21)/v1) L1
/// Q2 = (f21/v1) L1 - (f32/v2) L2
/// Q3 = (f31/v1) L1 + (f32/v2) L2 - (f13/v3) L3
/// ```
///
/// The flux coefficients are fixed at construction, so the closure is
/// pure and cheap to evaluate.
pub fn lake_rhs(params: &LakeParams, input: InputModel) -> SystemRhs {
    let out1 = (params.f31 + params.f21) / params.v1;
    let into2 = params.f21 / params.v1;
    let out2 = params.f32 / params.v2;
    let into3 = params.f31 / params.v1;
    let out3 = params.f13 / params.v3;
    SystemRhs::new(3, move |s, l, q| {
        q[0] = out3 * l[2] + input.eval(s) - out1 * l[0];
        q[1] = into2 * l[0] - out2 * l[1];
        q[2] = into3 * l[0] + out2 * l[1] - out3 * l[2];
    })
}
