from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

from wreathmac.config import get_settings
from wreathmac.models.keys import WreathKey

from .export import multisym_from_record, multisym_record
from .multisym import MultiSymFn

logger = logging.getLogger(__name__)


class ResultCache:
    """Content-addressed store of solved polynomials, one JSON file per key."""

    def __init__(self, root: Optional[str] = None) -> None:
        self.root = Path(root or get_settings().WREATHMAC_CACHE)

    def path_for(self, key: WreathKey) -> Path:
        digest = hashlib.sha256(key.canonical_json().encode("utf-8")).hexdigest()
        return self.root / digest[:2] / f"{digest}.json"

    def get(self, key: WreathKey) -> Optional[MultiSymFn]:
        path = self.path_for(key)
        if not path.exists():
            logger.debug("cache miss %s", key.canonical_json())
            return None
        doc = json.loads(path.read_text(encoding="utf-8"))
        if doc.get("key") != key.canonical_json():
            logger.warning("cache entry %s holds a different key; ignoring", path)
            return None
        logger.debug("cache hit %s", key.canonical_json())
        return multisym_from_record(doc["value"])

    def put(self, key: WreathKey, value: MultiSymFn) -> Path:
        path = self.path_for(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"key": key.canonical_json(), "value": multisym_record(value)}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path
