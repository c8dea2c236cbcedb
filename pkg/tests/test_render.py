import re
import pandas as pd
import pytest
from shapely.geometry import Point
from geoanon.exceptions import IngestError, ValidationError
from geoanon.render import TemplateParser, region_color, render_geojson, render_svg, voronoi_cells


@pytest.fixture
def assignment():
    return pd.DataFrame(
        {
            "region_id": ["A", "B", "C", "D"],
            "x": [0.0, 1.0, 0.0, 1.0],
            "y": [0.0, 0.0, 1.0, 1.0],
            "population": [3, 3, 3, 3],
            "aggregated_region_id": [0, 1, 0, 1],
        }
    )


@pytest.fixture
def sites():
    return pd.DataFrame({"site": [0, 1], "x": [0.0, 1.0], "y": [0.5, 0.5]})


def test_region_colors_are_stable_and_distinct():
    palette = [region_color(i) for i in range(20)]
    assert palette == [region_color(i) for i in range(20)]
    assert len(set(palette)) == 20
    assert all(re.fullmatch(r"#[0-9a-f]{6}", color) for color in palette)


def test_voronoi_cells_cover_envelope():
    cells = voronoi_cells([(0.0, 0.5), (1.0, 0.5)], (-0.5, -0.5, 1.5, 1.5))
    assert len(cells) == 2
    assert sum(cell.area for cell in cells) == pytest.approx(4.0)
    assert cells[0].contains(Point(0.0, 0.5)) or cells[1].contains(Point(0.0, 0.5))


def test_voronoi_single_site_is_envelope():
    cells = voronoi_cells([(0.0, 0.0)], (0, 0, 1, 1))
    assert len(cells) == 1
    assert cells[0].area == pytest.approx(1.0)


def test_svg_groups(assignment, sites):
    content = render_svg(assignment, sites)
    assert content.startswith("<?xml")
    assert re.findall(r'<g id="aggregated-(\d+)"', content) == ["0", "1"]
    assert content.count("<path") == 2
    assert "voronoi" not in re.sub(r"\.voronoi \{[^}]*\}", "", content)


def test_svg_voronoi_needs_sites(assignment):
    with pytest.raises(ValidationError):
        render_svg(assignment, None, voronoi=True)


def test_svg_escapes_region_ids(assignment):
    assignment.loc[0, "region_id"] = "<A&>"
    assert "&lt;A&amp;&gt;" in render_svg(assignment)


def test_svg_of_empty_assignment():
    empty = pd.DataFrame(columns=["region_id", "x", "y", "aggregated_region_id"])
    assert "<circle" not in render_svg(empty)


def test_geojson_falls_back_to_points(assignment):
    document = render_geojson(assignment)
    assert [f["geometry"]["type"] for f in document["features"]] == ["Point"] * 4
    assert document["features"][3]["properties"] == {
        "region_id": "D",
        "aggregated_region_id": 1,
        "population": 3,
    }


def test_assignment_columns_checked():
    with pytest.raises(ValidationError, match="aggregated_region_id"):
        render_geojson(pd.DataFrame({"region_id": [], "x": [], "y": []}))


def test_missing_template():
    with pytest.raises(IngestError):
        TemplateParser().render("nothing.j2")
