"""
Default settings for the io package.

This module contains default values for all optional arguments in the init
function of all classes in this package.

"""

# OutputFile
outputfile_comment_char = "#"
outputfile_eol = "\n"

# EventFile
eventfile_directory = "events"
eventfile_delimiter = ","

# DataFile
datafile_directory = "results"
datafile_delimiter = ","

# JSON
schema_version = 1

# Images
# (Eve, Odin, Draw, closed odd, closed even, outside)
ppm_colours = {"eve": (0, 0, 255), "odin": (255, 0, 0),
               "draw": (255, 255, 255), "closed_odd": (0, 0, 0),
               "closed_even": (0, 0, 0), "outside": (128, 128, 128)}
pgm_levels = {"eve": 64, "odin": 160, "draw": 255, "closed_odd": 0,
              "closed_even": 0, "outside": 128}
ascii_glyphs = {"eve": "E", "odin": "O", "draw": "D", "closed_odd": "#",
                "closed_even": "#", "outside": "."}
png_cell_size = 4
