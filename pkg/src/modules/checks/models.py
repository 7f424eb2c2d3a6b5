from typing import List, Optional

from src.common.data import ReportModel


class PropertyResult(ReportModel):
    """Outcome of one property over all trials"""

    suite: str
    name: str
    trials: int
    passed: int
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.trials


class CheckReport(ReportModel):
    """Outcome of a suite run; rendering is deterministic for a given seed"""

    suite: str
    n: int
    trials: int
    seed: int
    results: List[PropertyResult] = []

    @property
    def all_passed(self) -> bool:
        return all(result.ok for result in self.results)

    def render(self) -> str:
        lines = [
            f"check suite={self.suite} n={self.n} trials={self.trials} seed={self.seed}"
        ]
        for result in self.results:
            lines.append(
                f"{result.suite}/{result.name}: {result.passed}/{result.trials} passed"
            )
        for result in self.results:
            if result.counterexample is not None:
                lines.append(
                    f"counterexample {result.suite}/{result.name}: {result.counterexample}"
                )
        passing = sum(1 for result in self.results if result.ok)
        verdict = "PASS" if self.all_passed else "FAIL"
        lines.append(f"result: {verdict} ({passing}/{len(self.results)} properties)")
        return "\n".join(lines) + "\n"
