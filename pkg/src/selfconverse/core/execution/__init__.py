from selfconverse.core.execution.executor import ParallelExecutor

__all__ = ["ParallelExecutor"]
