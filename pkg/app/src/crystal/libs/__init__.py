
EMPTY_ROW_TXT: str = "*"
ROW_SEPARATOR: str = "/"
