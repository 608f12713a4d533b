import os

from hypothesis import HealthCheck, settings

# LLT_LAB_SEED pins hypothesis to a reproducible stream
settings.register_profile(
    "lltlab",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize="LLT_LAB_SEED" in os.environ,
)
settings.load_profile("lltlab")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[k])
