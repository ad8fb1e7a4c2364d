from . import calibrate, intervene, report, solve, study

COMMANDS = (solve, calibrate, intervene, study, report)

__all__ = ["COMMANDS"]
