"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from ..codes import Codebook


class CodebookModel(BaseModel):
    alphabet: Literal["DNA", "binary", "quinary", "ringR"] = "DNA"
    n: int
    m: int = Field(description="number of codewords")
    words: list[str]

    @classmethod
    def from_codebook(cls, book: Codebook) -> "CodebookModel":
        return cls(alphabet=book.alphabet, n=book.n, m=book.size,
                   words=list(book.words))

    def to_codebook(self) -> Codebook:
        book = Codebook.from_words(self.words, self.alphabet)
        if book.n != self.n or book.size != self.m:
            raise ValueError("codebook header fields disagree with the words")
        return book


class GauRmRequest(BaseModel):
    r: int
    m: int
    z: str = Field(description="nonzero ring element, e.g. '2u' or '3+u'")


class GauRmResponse(BaseModel):
    r: int
    m: int
    z: str
    predicted: dict
    codebook: CodebookModel


class QuinaryRequest(BaseModel):
    k: int = Field(ge=2, le=5)


class QuinaryResponse(BaseModel):
    k: int
    predicted: dict
    codebook: CodebookModel


class NhoRequest(BaseModel):
    code: Optional[str] = Field(default=None,
                                description="builtin code name")
    words: Optional[list[str]] = Field(default=None,
                                       description="binary words, if no name")
    x: str
    y: str


class NhoAdmissibility(BaseModel):
    rrc_admissible: bool
    tandem_admissible: bool
    predicted_gc_weight: int


class NhoResponse(BaseModel):
    admissibility: NhoAdmissibility
    codebook: CodebookModel


class VerifyRequest(BaseModel):
    codebook: CodebookModel
    constraints: str = Field(description="e.g. 'hamming:3,rc:3,gc,tandem:2'")


class ReportModel(BaseModel):
    constraint: str
    passed: bool = Field(alias="pass")
    witness: Optional[list[str]]
    params: dict
    computed: dict

    model_config = {"populate_by_name": True}


class VerifyResponse(BaseModel):
    passed: bool
    reports: list[ReportModel]


class DistanceRequest(BaseModel):
    metric: Literal["hamming", "gau", "nho"]
    a: str
    b: str
    l: Optional[int] = Field(default=None, description="block length for nho")


class DistanceResponse(BaseModel):
    metric: str
    distance: int


class BoundsRequest(BaseModel):
    name: str
    n: Optional[int] = None
    d: Optional[int] = None
    w: Optional[int] = None
    a_prev: Optional[int] = None
    variant: Optional[str] = None
    values: dict[str, int] = Field(default_factory=dict,
                                   description="named quantities for relations")


class BoundsResponse(BaseModel):
    name: str
    direction: Optional[str] = None
    exact: Optional[str] = None
    bound: Optional[int] = None
    applicable: Optional[bool] = None
    reason: Optional[str] = None
    holds: Optional[bool] = None


class InfoResponse(BaseModel):
    alphabet: str
    n: int
    m: int
    d_h: Optional[int]
    min_reverse_distance: Optional[int] = None
    min_rc_distance: Optional[int] = None
    gc_profile: Optional[dict[str, int]] = None


class ExportRequest(BaseModel):
    codebook: CodebookModel
    format: Literal["codebook", "fasta", "csv"] = "codebook"


class ExportResponse(BaseModel):
    format: str
    content: str


class ImportRequest(BaseModel):
    content: str
    format: Literal["codebook", "fasta", "csv"] = "codebook"
    alphabet: Literal["DNA", "binary", "quinary", "ringR"] = "DNA"


class ImportResponse(BaseModel):
    codebook: CodebookModel
