from dataclasses import dataclass


@dataclass(frozen=True)
class ExactResult:
    p_query: float
    p_evidence: float
    p_joint: float
    p_conditional: float
    leaf_count: int

    def __str__(self):
        return (f"P(query)\t{self.p_query:.12g}\n"
                f"P(evidence)\t{self.p_evidence:.12g}\n"
                f"P(query, evidence)\t{self.p_joint:.12g}\n"
                f"P(query | evidence)\t{self.p_conditional:.12g}\n"
                f"leaves\t{self.leaf_count}")

    def to_dict(self):
        return {
            'p_query': self.p_query,
            'p_evidence': self.p_evidence,
            'p_joint': self.p_joint,
            'p_conditional': self.p_conditional,
            'leaf_count': self.leaf_count
        }
