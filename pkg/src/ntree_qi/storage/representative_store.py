"""
Representative Store Module

Writes the minimal representatives of a census to a directory: one graph JSON
and one DOT file per class plus a JSONL index.
"""

import base64
import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import List, Union

from ntree_qi.census import CensusReport
from ntree_qi.exceptions import StorageError
from ntree_qi.graphs.colored_graph import dump_graph, to_dot


logger = logging.getLogger(__name__)


@dataclass
class ClassRecord:
    """One index line."""
    id: str
    pieces: int
    canonical: str


class RepresentativeStore:
    """
    Directory dump of census classes.

    Files are named class-0000.json / class-0000.dot in canonical order, and
    index.jsonl holds one {"id", "pieces", "canonical"} object per class.
    """

    INDEX_NAME = "index.jsonl"

    def __init__(self, path: Union[str, Path]):
        """
        Initialize the store.

        Args:
            path: Target directory; created if missing.
        """
        self.path = Path(path)
        self._init_storage()

    def _init_storage(self) -> None:
        try:
            self.path.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise StorageError(f"Failed to create dump directory: {e}") from e

    @property
    def index_path(self) -> Path:
        return self.path / self.INDEX_NAME

    def write(self, report: CensusReport) -> List[ClassRecord]:
        """
        Write every representative of a report, replacing any earlier index.

        Returns:
            The index records, in file order.
        """
        records = []
        try:
            with open(self.index_path, "w", encoding="utf-8") as index:
                for i, (key, graph) in enumerate(report.representatives):
                    record = ClassRecord(
                        id=f"class-{i:04d}",
                        pieces=len(graph.p_vertices),
                        canonical=base64.b64encode(key).decode("ascii"),
                    )
                    (self.path / f"{record.id}.json").write_text(dump_graph(graph), encoding="utf-8")
                    (self.path / f"{record.id}.dot").write_text(to_dot(graph, name=record.id.replace("-", "_")), encoding="utf-8")
                    index.write(json.dumps(asdict(record)) + "\n")
                    records.append(record)
        except OSError as e:
            raise StorageError(f"Failed to write census dump: {e}") from e

        logger.info(f"Wrote {len(records)} representatives to {self.path}")
        return records

    def read_index(self) -> List[ClassRecord]:
        """Read back the index written by write()."""
        records = []
        try:
            with open(self.index_path, "r", encoding="utf-8") as f:
                for line in f:
                    line = line.strip()
                    if line:
                        records.append(ClassRecord(**json.loads(line)))
        except (OSError, json.JSONDecodeError, TypeError) as e:
            raise StorageError(f"Failed to read census index: {e}") from e
        return records
