"""
Hypothesis settings tiers shared by the property suites.

Tiers:
- LAW_SETTINGS: 1000 examples - algebraic laws of the logic kernel
- ORACLE_SETTINGS: 500 examples - data analyses checked against graph oracles
- HEAVY_SETTINGS: 200 examples - cheap algebraic and graph laws
- STANDARD_SETTINGS: 100 examples - data-level properties
- QUICK_SETTINGS: 30 examples - suites that enumerate whole model families
"""
from hypothesis import HealthCheck, settings

LAW_SETTINGS = settings(max_examples=1000, deadline=None)

ORACLE_SETTINGS = settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])

HEAVY_SETTINGS = settings(max_examples=200, deadline=None)

STANDARD_SETTINGS = settings(max_examples=100, deadline=None)

# Family enumeration plus exhaustive feedback search per example
QUICK_SETTINGS = settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
