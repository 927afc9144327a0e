import json
import os

import pytest

from randomtrap import control
from randomtrap.experiments import draw_map_for_sample
from randomtrap.game import Outcome, Player, Transcript, solve_trap
from randomtrap.io import DataFile, EventFile, InputFile, ascii_map, \
    code_image, json_document, output_name, read_json, rgb_image, \
    write_ascii, write_image, write_json, write_pgm, write_png, write_ppm, \
    write_stats, write_transcript
from randomtrap.lattice import bcc_box, diamond, plain_square
from randomtrap.misc import Clock
from randomtrap.percolation import BoardSample, sample_board


def _corner_map():
    region = plain_square(2)
    return draw_map_for_sample(
        BoardSample.from_closed_vertices(region, [(1, 2)]))


def test_output_name():
    assert output_name("solve", "diamond", 20, 0.05, 0.0, 3, "csv") == \
        "solve_diamond20_p0.05_q0_s3.csv"


def test_input_file(tmp_path):
    path = tmp_path / "board.txt"
    path.write_text("first\nsecond\n")
    f = InputFile(str(path))
    assert f.n_lines == 2
    assert f.lines == ["first", "second"]
    with pytest.raises(IOError):
        InputFile(str(tmp_path / "missing.txt"))


def test_data_file(results_dir):
    data = DataFile("rows.csv", ["n", "p", "note"],
                    directory=str(results_dir),
                    config={"seed": 1, "command": "solve"})
    data.add({"n": 3, "p": 0.1})
    data.add([4, 0.25, 'say "hi", twice'])
    with pytest.raises(ValueError):
        data.add({"m": 1})
    with pytest.raises(ValueError):
        data.add([1, 2])
    data.save()
    lines = open(data.fullpath).read().splitlines()
    assert lines[1:3] == ["#command = solve", "#seed = 1"]
    assert lines[3:] == ["n,p,note", "3,0.1,",
                         '4,0.25,"say ""hi"", twice"']
    assert data.n_rows == 2


def test_event_file(tmp_path):
    events = EventFile("run.events", directory=str(tmp_path), clock=Clock())
    events.log("Solve,diamond,3")
    events.warn("odd board")
    events.save()
    lines = open(events.fullpath).read().splitlines()
    assert lines[2] == "Time,Type,Event,Value,Detail"
    assert lines[3].endswith(",Solve,diamond,3")
    assert ",WARNING,odd board" in lines[4]


def test_event_file_needs_a_clock(tmp_path):
    with pytest.raises(RuntimeError):
        EventFile("run.events", directory=str(tmp_path))


def test_saved_files_are_logged_unless_switched_off(tmp_path):
    session = control.initialize(directory=str(tmp_path / "events"),
                                 log_level=2)
    assert not session.events.logging
    logged = DataFile("logged.csv", ["n"], directory=str(tmp_path))
    logged.add([1])
    logged.save()
    quiet = DataFile("quiet.csv", ["n"], directory=str(tmp_path))
    assert quiet.logging
    quiet.set_logging(False)
    quiet.add([2])
    quiet.save()
    path = session.events.fullpath
    control.end()
    text = open(path).read()
    assert "File,saved,logged.csv" in text
    assert "Data,saved,logged.csv" in text
    assert "quiet.csv" not in text


def test_json_round_trip(tmp_path):
    path = str(tmp_path / "doc.json")
    document = json_document("stats", {"rows": [{"n": 2}]}, {"seed": 0})
    write_json(path, document)
    assert read_json(path) == document
    text = open(path).read()
    assert text.endswith("\n")
    assert text.index('"config"') < text.index('"kind"')


def test_json_schema_version(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps({"schema_version": 99, "kind": "stats"}))
    with pytest.raises(ValueError):
        read_json(str(path))
    path.write_text(json.dumps({"kind": "stats"}))
    with pytest.raises(ValueError):
        read_json(str(path))


def test_write_transcript(tmp_path):
    transcript = Transcript((1, 0), [(0, 0)], Player.EVE)
    path = write_transcript(str(tmp_path / "game.json"), transcript)
    document = read_json(path)
    assert document["kind"] == "transcript"
    assert Transcript.from_json(json.dumps(document)) == transcript


def test_write_stats(results_dir):
    rows = [{"n": 3, "fraction": 0.5, "extra": "x"}]
    csv_path, json_path = write_stats(str(results_dir), "summary", rows,
                                      ["n", "fraction"], {"seed": 2})
    assert open(csv_path).read().splitlines()[-1] == "3,0.5"
    assert read_json(json_path)["rows"] == rows


def test_code_image_puts_largest_y_on_top():
    grid = _corner_map()
    image = code_image(grid)
    assert image[0, 0] == Outcome.CLOSED_ODD
    assert image[1, 0] != Outcome.CLOSED_ODD
    assert ascii_map(grid)[0][0] == "#"


def test_ascii_map_of_a_diamond():
    grid = solve_trap(sample_board(diamond(1), 0.0, 0.0))
    assert ascii_map(grid) == [".O.", "OOO", ".O."]


def test_rgb_image():
    rgb = rgb_image(_corner_map())
    assert rgb.shape == (2, 2, 3)
    assert rgb[0, 0].tolist() == [0, 0, 0]


def test_write_ppm_and_pgm(tmp_path):
    grid = _corner_map()
    path = write_ppm(str(tmp_path / "map.ppm"), grid)
    content = open(path, "rb").read()
    assert content.startswith(b"P6\n2 2\n255\n")
    assert len(content) == len(b"P6\n2 2\n255\n") + 2 * 2 * 3
    path = write_pgm(str(tmp_path / "map.pgm"), grid)
    lines = open(path).read().splitlines()
    assert lines[:3] == ["P2", "2 2", "255"]
    assert lines[3].split()[0] == "0"


def test_write_image_formats(tmp_path):
    grid = _corner_map()
    path = write_image(str(tmp_path / "map.txt"), grid)
    assert open(path).read().splitlines() == ascii_map(grid)
    assert write_ascii(str(tmp_path / "again.txt"), grid)
    with pytest.raises(ValueError):
        write_image(str(tmp_path / "map.bmp"), grid)


def test_writers_are_deterministic(tmp_path):
    grid = _corner_map()
    a = write_ppm(str(tmp_path / "a.ppm"), grid)
    b = write_ppm(str(tmp_path / "b.ppm"), grid)
    assert open(a, "rb").read() == open(b, "rb").read()


def test_write_png(tmp_path):
    pytest.importorskip("pygame")
    path = write_png(str(tmp_path / "map.png"), _corner_map(), cell_size=3)
    assert os.path.getsize(path) > 0


def test_three_dimensional_maps_are_refused():
    grid = solve_trap(sample_board(bcc_box((-1, -1, -1), 2, 3), 0.2, 0.0))
    with pytest.raises(ValueError):
        code_image(grid)
