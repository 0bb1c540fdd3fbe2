from PIL import Image, ImageDraw, ImageFont


def _to_pixel(iteration, estimate, first, last, plot_box):
    left, top, right, bottom = plot_box
    span = max(last - first, 1)
    x = left + (iteration - first) * (right - left) / span
    y = bottom - estimate * (bottom - top)
    return x, y


def print_trace(rows, path="trace.png", reference=None, chains=None):
    """
    Draws the running estimate of one or more chains against the iteration
    number, on a fixed [0, 1] vertical axis. `rows` are ChainRow records;
    `chains` optionally gives further row lists drawn in other colours.
    `reference` draws a dashed horizontal line, e.g. the exact value.
    """
    image_size = (640, 420)
    plot_box = (60, 20, 620, 340)  # left, top, right, bottom
    image = Image.new('RGB', image_size, 'white')
    draw = ImageDraw.Draw(image)
    font = ImageFont.load_default()

    series = [rows] + list(chains or [])
    series = [chain for chain in series if chain]
    colors = ['#1f4e9c', '#d1495b', '#2a9d52', '#edae49', '#6c4f9c', '#00798c']

    # Axes and horizontal grid
    left, top, right, bottom = plot_box
    draw.rectangle([plot_box[:2], plot_box[2:]], outline='black')
    for tick in range(0, 11, 2):
        value = tick / 10
        _, y = _to_pixel(0, value, 0, 1, plot_box)
        draw.line([(left, y), (right, y)], fill='#e0e0e0')
        draw.text((left - 30, y - 6), f"{value:.1f}", font=font, fill='black')

    if series:
        first = min(chain[0].iteration for chain in series)
        last = max(chain[-1].iteration for chain in series)
        draw.text((left, bottom + 6), str(first), font=font, fill='black')
        label = str(last)
        bbox = font.getbbox(label)
        draw.text((right - (bbox[2] - bbox[0]), bottom + 6), label, font=font, fill='black')

        for index, chain in enumerate(series):
            # thin out long chains to at most one point per pixel column
            stride = max(1, len(chain) // (right - left))
            points = [_to_pixel(row.iteration, row.estimate, first, last, plot_box) for row in chain[::stride]]
            points.append(_to_pixel(chain[-1].iteration, chain[-1].estimate, first, last, plot_box))
            draw.line(points, fill=colors[index % len(colors)], width=2)

    if reference is not None:
        _, y = _to_pixel(0, reference, 0, 1, plot_box)
        for x in range(left, right, 12):
            draw.line([(x, y), (min(x + 6, right), y)], fill='black', width=1)

    # Add legend
    legend_items = [(f"chain {index}", colors[index % len(colors)]) for index in range(len(series))]
    if reference is not None:
        legend_items.append((f"exact {reference:.5f}", "black"))
    legend_x = 10
    legend_y = 370
    legend_box_size = 14
    legend_spacing = 6
    for label, color in legend_items:
        draw.rectangle([legend_x, legend_y, legend_x + legend_box_size, legend_y + legend_box_size], fill=color, outline="black")
        draw.text((legend_x + legend_box_size + legend_spacing, legend_y), label, font=font, fill="black")
        bbox = font.getbbox(label)
        legend_x += legend_box_size + (bbox[2] - bbox[0]) + legend_spacing + 10

    image.save(path)
    return image
