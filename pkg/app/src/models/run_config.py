# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Run Configuration Model Module

This module defines the validated parameters of one command-line run. It plays the
role query-parameter models play for an HTTP surface: every command receives a
RunConfig whose validators reject inconsistent flag combinations up front.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

Command = Literal["enumerate", "verify", "graph", "param", "convert"]
OutputFormat = Literal["json", "tsv", "dot"]
Strategy = Literal["bfs", "direct"]
InputKind = Literal["lusztig", "string"]


class RunConfig(BaseModel):
    """
    Parameters shared by all commands.

    ``max_rank`` is the safety cap taken from the engine settings.
    """
    command: Command
    rank: Optional[int] = Field(None, ge=1, description="Rank r of the type A_r root system; param/convert infer it from the element")
    depth: int = Field(..., ge=0, description="Truncation cap D on the height of -wt(b)")
    format: OutputFormat = Field("json", description="Output format")
    strategy: Strategy = Field("bfs", description="Crystal enumeration strategy")
    coefficients: bool = Field(False, description="Label graph nodes with their (1-u)^seg coefficient")
    kind: InputKind = Field("lusztig", description="Datum kind accepted by the convert command")
    output: Optional[str] = Field(None, description="Output path; standard output when omitted")
    element: Optional[str] = Field(None, description="Tableau or datum text for param/convert")
    max_rank: int = Field(6, ge=1, description="Rank safety limit")

    @model_validator(mode="after")
    def validate_combination(self):
        if self.rank is None and self.command not in ("param", "convert"):
            raise ValueError(f"the {self.command} command needs --rank")
        if self.rank is not None and self.rank > self.max_rank:
            raise ValueError(f"rank {self.rank} exceeds the configured limit {self.max_rank}")
        if self.format == "dot" and self.command != "graph":
            raise ValueError("dot output is only available for the graph command")
        if self.command == "graph" and self.format != "dot":
            raise ValueError("the graph command only emits dot output")
        if self.command in ("param", "convert") and not self.element:
            raise ValueError(f"the {self.command} command needs an element argument")
        return self
