from .class_store import ClassRecord, ClassStore

__all__ = ["ClassRecord", "ClassStore"]
