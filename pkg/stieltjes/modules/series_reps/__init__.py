"""Stieltjes toolkit SeriesRepsModule."""

__all__ = ["SeriesDiagnostics", "SeriesRepsModule"]

from stieltjes.modules.series_reps.series_reps import SeriesDiagnostics, SeriesRepsModule
