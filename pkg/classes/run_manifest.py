from classes.errors import UsageError

MODES = ("mcmc", "independent", "exact")


class RunManifest:
    def __init__(self, program_path, query_text, evidence_text, mode, config=None, csv_path=None,
                 plot_path=None, qdump_path=None, chains=1):
        if mode not in MODES:
            raise UsageError(f"unknown mode {mode!r}")
        if chains < 1:
            raise UsageError(f"number of chains must be at least 1, got {chains}")
        if mode != "mcmc" and (chains > 1 or plot_path):
            raise UsageError(f"--chains and --plot need the MCMC sampler, not {mode}")
        if mode == "exact" and (qdump_path or config is not None):
            raise UsageError("exact inference takes no sampler options")
        self.program_path = program_path
        self.query_text = query_text
        self.evidence_text = evidence_text
        self.mode = mode
        self.config = config
        self.csv_path = csv_path
        self.plot_path = plot_path
        self.qdump_path = qdump_path
        self.chains = chains

    def __str__(self):
        lines = [f"_________________________________",
                 f"Program\t\t{self.program_path}",
                 f"Query\t\t{self.query_text}",
                 f"Evidence\t{self.evidence_text}",
                 f"Mode\t\t{self.mode}"]
        if self.config is not None:
            lines.extend(f"{key}\t{value}" for key, value in self.config.to_dict().items())
        if self.mode == "mcmc":
            lines.append(f"chains\t{self.chains}")
        for label, path in (("csv", self.csv_path), ("plot", self.plot_path), ("qdump", self.qdump_path)):
            if path:
                lines.append(f"{label}\t{path}")
        lines.append("_________________________________")
        return "\n".join(lines)

    def to_dict(self):
        return {
            'program_path': self.program_path,
            'query': self.query_text,
            'evidence': self.evidence_text,
            'mode': self.mode,
            'config': self.config.to_dict() if self.config is not None else None,
            'csv_path': self.csv_path,
            'plot_path': self.plot_path,
            'qdump_path': self.qdump_path,
            'chains': self.chains
        }
