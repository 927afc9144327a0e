"""The io package.

This package contains the classes and functions that implement file input
and output: data, event and JSON files, outcome map images and the naming of
output files.

"""

from . import defaults
from ._files import InputFile, OutputFile, DataFile, EventFile, \
    output_name, json_document, write_json, read_json, write_transcript, \
    write_stats
from ._images import WRITERS, code_image, rgb_image, ascii_map, write_ppm, \
    write_pgm, write_ascii, write_png, write_image
