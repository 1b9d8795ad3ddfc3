"""Storage package for fixture and result files"""

from .local_storage import LocalStorage, local_storage

__all__ = ['LocalStorage', 'local_storage']
