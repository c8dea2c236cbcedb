from abc import ABC, abstractmethod
from collections.abc import Sequence
from navconfig.logging import logging
from ..core import InitialRegion, Site


class AbstractPlacement(ABC):
    """AbstractPlacement.

    a Placement is a pluggable strategy that decides where the Voronoi sites
    go; the rest of the pipeline only sees the resulting sites.
    """
    name: str = "abstract"
    label: str = ""

    def __init__(self) -> None:
        self._logger = logging.getLogger(f"geoanon.placement.{self.name}")

    def __repr__(self) -> str:
        return f"<Placement.{self.name}>"

    @abstractmethod
    def place(self, regions: Sequence[InitialRegion], s: int) -> list[Site]:
        """Return exactly ``s`` sites indexed 0..s-1."""

    def __call__(self, regions: Sequence[InitialRegion], s: int) -> list[Site]:
        sites = self.place(regions, s)
        self._logger.debug(f"Placed {len(sites)} sites over {len(regions)} regions")
        return sites
