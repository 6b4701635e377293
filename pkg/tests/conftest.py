from hypothesis import settings

# fully deterministic property tests: same examples every run
settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")
