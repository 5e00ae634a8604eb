use ringop::operad::{check_axioms, check_einfty_set, CheckConfig, Report};
use ringop::term::{sset_operad, Mode};

fn failing(r: &Report) -> Vec<&str> {
    r.sections.iter().filter(|s| s.failed()).map(|s| s.name.as_str()).collect()
}

#[test]
fn sset_axioms_cap_two() {
    for mode in [Mode::Sym, Mode::Biperm] {
        let r = check_axioms(&sset_operad(mode), &CheckConfig::new(2)).unwrap();
        println!("{r}");
        assert!(failing(&r).is_empty(), "{r}");
    }
}

#[test]
fn sset_einfty_cap_two() {
    for mode in [Mode::Sym, Mode::Biperm] {
        let r = check_einfty_set(&sset_operad(mode), &CheckConfig::new(2)).unwrap();
        println!("{r}");
        assert!(failing(&r).is_empty(), "{r}");
    }
}
