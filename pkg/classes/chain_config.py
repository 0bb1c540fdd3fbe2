from classes.errors import UsageError
from utilities.settings import Q_FLOOR, STEP_LIMIT


class SingleSwitch:
    name = "single"

    def __str__(self):
        return "SingleSwitch"

    def __eq__(self, other):
        return isinstance(other, SingleSwitch)

    def __hash__(self):
        return hash(self.name)

    def to_dict(self):
        return {'strategy': self.name}


class MultiSwitch:
    name = "multi"

    def __init__(self, p):
        if not (0.0 < p <= 1.0):
            raise UsageError(f"multi-switch forget probability must be in (0, 1], got {p}")
        self.p = float(p)

    def __str__(self):
        return f"MultiSwitch(p={self.p})"

    def __eq__(self, other):
        return isinstance(other, MultiSwitch) and other.p == self.p

    def __hash__(self):
        return hash((self.name, self.p))

    def to_dict(self):
        return {'strategy': self.name, 'p': self.p}


class ChainConfig:
    def __init__(self, steps, burn_in=0, strategy=None, adaptive=False, seed=0, step_limit=None,
                 trace_dedup=False, q_floor=None, freeze_q=False, debug_checks=False):
        if steps <= 0:
            raise UsageError(f"number of samples must be positive, got {steps}")
        if burn_in < 0:
            raise UsageError(f"burn-in must be non-negative, got {burn_in}")
        self.steps = int(steps)
        self.burn_in = int(burn_in)
        self.strategy = strategy if strategy is not None else SingleSwitch()
        self.adaptive = adaptive
        self.seed = int(seed)
        self.step_limit = int(step_limit) if step_limit else STEP_LIMIT
        self.trace_dedup = trace_dedup
        self.q_floor = Q_FLOOR if q_floor is None else float(q_floor)
        self.freeze_q = freeze_q
        self.debug_checks = debug_checks

    def with_seed(self, seed):
        return ChainConfig(self.steps, self.burn_in, self.strategy, self.adaptive, seed, self.step_limit,
                           self.trace_dedup, self.q_floor, self.freeze_q, self.debug_checks)

    def __str__(self):
        return (f"ChainConfig(\n"
                f"  steps={self.steps},\n"
                f"  burn_in={self.burn_in},\n"
                f"  strategy={self.strategy},\n"
                f"  adaptive={self.adaptive},\n"
                f"  seed={self.seed},\n"
                f"  step_limit={self.step_limit},\n"
                f"  trace_dedup={self.trace_dedup},\n"
                f"  q_floor={self.q_floor},\n"
                f"  freeze_q={self.freeze_q},\n"
                f"  debug_checks={self.debug_checks}\n"
                f")")

    def to_dict(self):
        return {
            'steps': self.steps,
            'burn_in': self.burn_in,
            **self.strategy.to_dict(),
            'adaptive': self.adaptive,
            'seed': self.seed,
            'step_limit': self.step_limit,
            'trace_dedup': self.trace_dedup,
            'q_floor': self.q_floor,
            'freeze_q': self.freeze_q,
            'debug_checks': self.debug_checks
        }
