//! Robustness and round-trip properties of the expression pipeline.

use hns4_cli::output::render;
use hns4_cli::{eval_str, ExprError};
use hns4_core::{System, SystemKind};
use proptest::prelude::*;

fn any_system() -> impl Strategy<Value = System> {
    prop::sample::select(SystemKind::NAMED.to_vec()).prop_map(|kind| System::builtin(kind).unwrap())
}

proptest! {
    /// Every input yields a value or an error, never a panic.
    #[test]
    fn pipeline_is_total_on_arbitrary_text(input in ".{0,60}", sys in any_system()) {
        let _ = eval_str(&input, &sys);
    }

    /// Denser sampling over the expression alphabet.
    #[test]
    fn pipeline_is_total_on_expression_alphabet(
        input in "[-+*/\\\\()e0-9. ]{0,40}",
        sys in any_system(),
    ) {
        let _ = eval_str(&input, &sys);
    }

    /// Rendering at six significant digits and re-parsing recovers the
    /// coefficients to rendering precision.
    #[test]
    fn render_round_trips(sys in any_system(), coeffs in prop::array::uniform4(-1.0..1.0f64)) {
        let w = sys.num(coeffs).unwrap();
        let text = render(&w);
        let back = eval_str(&text, &sys).unwrap();
        for i in 1..=4 {
            prop_assert!(
                (back.coeff(i) - w.coeff(i)).abs() <= 1e-6,
                "rendered {text:?}, got {:?} from {:?}",
                back.coeffs(),
                w.coeffs()
            );
        }
    }
}

#[test]
fn operator_semantics_match_library_quotients() {
    let sys = System::builtin(SystemKind::AH).unwrap();
    let a = sys.num([1.0, 0.5, -0.25, 2.0]).unwrap();
    let b = sys.num([0.5, 1.0, 0.0, -1.0]).unwrap();
    let via_cli = eval_str("(1 + 0.5*e2 - 0.25*e3 + 2*e4) / (0.5 + e2 - e4)", &sys).unwrap();
    assert_eq!(via_cli, a.div_right(&b).unwrap());
    let via_cli = eval_str("(0.5 + e2 - e4) \\ (1 + 0.5*e2 - 0.25*e3 + 2*e4)", &sys).unwrap();
    assert_eq!(via_cli, a.div_left(&b).unwrap());
}

#[test]
fn deep_input_is_an_error_not_a_crash() {
    let sys = System::builtin(SystemKind::H).unwrap();
    let deep = format!("{}1{}", "(".repeat(100_000), ")".repeat(100_000));
    assert!(matches!(eval_str(&deep, &sys), Err(ExprError::Parse(_))));
    let minus = format!("{}e2", "-".repeat(100_000));
    assert!(matches!(eval_str(&minus, &sys), Err(ExprError::Parse(_))));
}
