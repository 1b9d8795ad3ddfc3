"""
Local file storage for polymatroid files, fixture exports and tabular results.
JSON documents are read from a path or from standard input ('-').
"""

import json
import sys
from pathlib import Path
from typing import Any, List, Optional, Union

import pandas as pd
from loguru import logger

from config.config import FIXTURES_DIR

Source = Union[str, Path]


class LocalStorage:
    """Flat-file storage rooted at a data directory"""

    def __init__(self, data_dir: Path = FIXTURES_DIR):
        self.data_dir = Path(data_dir)

    def _get_collection_path(self, collection: str, format: str = 'json') -> Path:
        """Get the file path for a collection"""
        return self.data_dir / f"{collection}.{format}"

    # ===== JSON Operations =====

    def read_json(self, source: Source) -> Any:
        """Parse a JSON document from a file path, or from stdin when source is '-'"""
        if str(source) == '-':
            text = sys.stdin.read()
            logger.debug(f"Read {len(text)} characters from standard input")
            return json.loads(text)

        filepath = Path(source)
        try:
            with open(filepath, 'r') as f:
                data = json.load(f)
            logger.debug(f"Loaded JSON document from {filepath}")
            return data
        except Exception as e:
            logger.error(f"Error loading JSON from {filepath}: {e}")
            raise

    def save_json(self, collection: str, data: Any) -> Path:
        """Save a JSON document as <data_dir>/<collection>.json"""
        filepath = self._get_collection_path(collection, 'json')

        try:
            self.data_dir.mkdir(parents=True, exist_ok=True)
            with open(filepath, 'w') as f:
                json.dump(data, f, indent=2)
                f.write("\n")
            logger.info(f"Saved {collection} to {filepath}")
            return filepath
        except Exception as e:
            logger.error(f"Error saving JSON to {filepath}: {e}")
            raise

    def load_json(self, collection: str) -> Optional[Any]:
        """Load a stored collection; None when it does not exist"""
        filepath = self._get_collection_path(collection, 'json')

        if not filepath.exists():
            logger.warning(f"File not found: {filepath}")
            return None
        return self.read_json(filepath)

    # ===== Pandas Operations =====

    def save_dataframe(self, collection: str, df: pd.DataFrame) -> int:
        """Save pandas DataFrame as <data_dir>/<collection>.csv"""
        filepath = self._get_collection_path(collection, 'csv')

        try:
            self.data_dir.mkdir(parents=True, exist_ok=True)
            df.to_csv(filepath, index=False)
            logger.info(f"Saved DataFrame with {len(df)} rows to {filepath}")
            return len(df)
        except Exception as e:
            logger.error(f"Error saving DataFrame to {filepath}: {e}")
            raise

    def load_dataframe(self, collection: str) -> pd.DataFrame:
        """Load a stored CSV table"""
        filepath = self._get_collection_path(collection, 'csv')

        if not filepath.exists():
            logger.warning(f"File not found: {filepath}")
            return pd.DataFrame()

        try:
            df = pd.read_csv(filepath)
            logger.debug(f"Loaded DataFrame with {len(df)} rows from {filepath}")
            return df
        except Exception as e:
            logger.error(f"Error loading DataFrame from {filepath}: {e}")
            raise

    # ===== Utility Methods =====

    def list_collections(self) -> List[str]:
        """List all stored collections"""
        if not self.data_dir.exists():
            return []
        return sorted({path.stem for path in self.data_dir.glob('*') if path.is_file()})

    def collection_exists(self, collection: str) -> bool:
        """Check if a collection exists"""
        return (
            self._get_collection_path(collection, 'json').exists() or
            self._get_collection_path(collection, 'csv').exists()
        )


# Singleton instance for fixture storage
local_storage = LocalStorage()
