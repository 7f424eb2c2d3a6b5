from pydantic import BaseModel, ConfigDict


class WireModel(BaseModel):
    """Base for every JSON payload read or written by the front end"""

    model_config = ConfigDict(extra="forbid", frozen=True)


class ReportModel(BaseModel):
    """Base for in-memory results that are rendered as text or JSON"""

    model_config = ConfigDict(extra="forbid")
