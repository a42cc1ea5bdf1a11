"""
Renders command results as a human table, CSV or a versioned JSON envelope
"""
import sys
from typing import Any, Dict, List, Optional, TextIO

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from ..config import settings


class CommandOutput(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    frame: pd.DataFrame
    parameters: Dict[str, Any]
    result: Optional[Dict[str, Any]] = None
    # human format only
    footer: List[str] = Field(default_factory=list)


class Envelope(BaseModel):
    """JSON output; bump settings.SCHEMA_VERSION when the shape changes"""

    schema_version: int
    command: str
    parameters: Dict[str, Any]
    result: Optional[Dict[str, Any]] = None
    rows: List[Dict[str, Any]]


def add_format_flags(parser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--csv", dest="output_format", action="store_const", const="csv", help="CSV output")
    group.add_argument("--json", dest="output_format", action="store_const", const="json", help="JSON output")
    parser.set_defaults(output_format="table")


def _records(frame: pd.DataFrame) -> List[Dict[str, Any]]:
    cleaned = frame.astype(object).where(frame.notna(), None)
    return cleaned.to_dict("records")


def emit(command: str, output: CommandOutput, output_format: str, stream: Optional[TextIO] = None) -> None:
    stream = sys.stdout if stream is None else stream
    frame = output.frame

    if output_format == "csv":
        frame.to_csv(stream, index=False, lineterminator="\n")
        return

    if output_format == "json":
        envelope = Envelope(
            schema_version=settings.SCHEMA_VERSION,
            command=command,
            parameters=output.parameters,
            result=output.result,
            rows=_records(frame),
        )
        stream.write(envelope.model_dump_json(indent=2) + "\n")
        return

    places = settings.DECIMAL_PLACES
    stream.write(frame.to_string(index=False, float_format=lambda v: f"{v:.{places}f}", na_rep="-") + "\n")
    for line in output.footer:
        stream.write(line + "\n")
