"""
RCC Toolkit - Qualitative spatial reasoning with RCC8 and RCC5
"""

__version__ = "1.0.0"
__author__ = "LuciferIQ162"
__description__ = "Constraint solving, model checking and reductions for region connection calculi"

# Lazy imports keep `import rcc_toolkit` cheap for the CLI
_LAZY = {
    "ConstraintNetwork": ("solver.network", "ConstraintNetwork"),
    "satisfiable_rs": ("solver.closure", "satisfiable_rs"),
    "realize": ("solver.realize", "realize"),
    "RegionStructure": ("structures.region_structure", "RegionStructure"),
    "Valuation": ("structures.region_structure", "Valuation"),
    "parse": ("logic.parser", "parse"),
    "check": ("logic.semantics", "check"),
    "bounded_sat": ("logic.search", "bounded_sat"),
    "FixtureManager": ("fixtures.fixture_manager", "FixtureManager"),
    "run_suite": ("suite.runner", "run_suite"),
}


def __getattr__(name):
    if name in _LAZY:
        import importlib
        module, attribute = _LAZY[name]
        return getattr(importlib.import_module(f".{module}", __name__), attribute)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = list(_LAZY)
