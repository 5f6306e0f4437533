//! Runs every example so they stay in sync with the library.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[path = $path]
        mod $name;

        #[test]
        fn $name() {
            $name::run().unwrap();
        }
    };
}

example!(multiplicities, "../examples/multiplicities.rs");
example!(characters, "../examples/characters.rs");
example!(character_measure, "../examples/character_measure.rs");
example!(poisson_limit, "../examples/poisson_limit.rs");
example!(convergence, "../examples/convergence.rs");
example!(sampling, "../examples/sampling.rs");
