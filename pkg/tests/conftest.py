from hypothesis import HealthCheck, settings

# Deterministic property runs: derandomized, no wall-clock flakiness from
# exact big-rational arithmetic.
settings.register_profile(
    "exact",
    derandomize=True,
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
