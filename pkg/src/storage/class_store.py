from pathlib import Path
from threading import Lock
from typing import Dict, Iterator, List, Optional, Tuple

from loguru import logger

from ..core.triangulation import Triangulation
from ..models.flip_models import FlipMove
from ..models.search_models import CanonicalForm


class ClassRecord:
    """A visited isomorphism class with its concrete representative"""

    __slots__ = ("form", "representative", "depth", "parent", "move")

    def __init__(
        self,
        form: CanonicalForm,
        representative: Triangulation,
        depth: int = 0,
        parent: Optional[CanonicalForm] = None,
        move: Optional[FlipMove] = None,
    ):
        self.form = form
        self.representative = representative
        self.depth = depth
        self.parent = parent
        self.move = move


class ClassStore:
    """Dedup store keyed by canonical digest, verified on full facet lists"""

    def __init__(self):
        self._buckets: Dict[int, List[ClassRecord]] = {}
        self._order: List[ClassRecord] = []
        self._lock = Lock()
        self.collisions = 0

    def insert_if_absent(self, record: ClassRecord) -> bool:
        """Atomically add a record unless its class is present; True when added"""
        with self._lock:
            bucket = self._buckets.setdefault(record.form.digest, [])
            for existing in bucket:
                if existing.form.facets == record.form.facets:
                    return False
            if bucket:
                self.collisions += 1
                logger.warning(f"Digest collision on {record.form.hex_digest}")
            bucket.append(record)
            self._order.append(record)
            return True

    def get(self, form: CanonicalForm) -> Optional[ClassRecord]:
        for record in self._buckets.get(form.digest, []):
            if record.form.facets == form.facets:
                return record
        return None

    def __contains__(self, form: CanonicalForm) -> bool:
        return self.get(form) is not None

    def __len__(self) -> int:
        return len(self._order)

    def __iter__(self) -> Iterator[ClassRecord]:
        return iter(list(self._order))

    def forms(self) -> List[CanonicalForm]:
        return [record.form for record in self._order]

    def path_to(self, form: CanonicalForm) -> Tuple[CanonicalForm, List[FlipMove]]:
        """Root class and the moves leading from its representative to `form`"""
        moves: List[FlipMove] = []
        record = self.get(form)
        while record is not None and record.parent is not None:
            moves.append(record.move)
            record = self.get(record.parent)
        moves.reverse()
        return (record.form if record else form), moves

    def dump(self, directory: str) -> int:
        """Write every class as a canonical facet file; returns the file count"""
        from ..utils.facet_io import write_triangulation

        target = Path(directory)
        target.mkdir(parents=True, exist_ok=True)
        for index, record in enumerate(self._order):
            path = target / f"class_{index:06d}_{record.form.hex_digest}.txt"
            write_triangulation(record.form.to_triangulation(), str(path))
        logger.info(f"Dumped {len(self._order)} classes to {target}")
        return len(self._order)
