from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict

from pydantic import BaseModel, ConfigDict

from src.modules.exterior_algebra.models import Matrix


class EngineConfig(BaseModel):
    """Base configuration for determinant engines"""

    model_config = ConfigDict(extra="allow")  # engine-specific fields

    method: str


class DeterminantEngine(ABC):
    """
    Abstract base class for determinant backends.
    All engine implementations must implement these methods.
    """

    @abstractmethod
    def compute(self, matrix: Matrix) -> Fraction:
        """
        Compute the determinant of a square matrix exactly

        Args:
            matrix: Square exact matrix

        Returns:
            The determinant
        """

    @abstractmethod
    def get_method_info(self) -> Dict:
        """
        Get information about the engine

        Returns:
            Dictionary with engine details (method, parameters)
        """


class BaseDeterminantEngine(DeterminantEngine):
    """
    Base implementation with common functionality for all engines
    """

    def __init__(self, config: EngineConfig):
        self.config = config
        self.method = config.method

    def get_method_info(self) -> Dict:
        return {"method": self.method}
